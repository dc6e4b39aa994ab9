from __future__ import annotations

import logging

import pytest
from python_af_semantics.models.framework import ArgSet
from python_af_semantics.models.framework import attackers_of
from python_af_semantics.models.framework import attacks_set
from python_af_semantics.models.framework import build_framework
from python_af_semantics.models.framework import DuplicateLabelError
from python_af_semantics.models.framework import ExtensionSet
from python_af_semantics.models.framework import Framework
from python_af_semantics.models.framework import FrameworkError
from python_af_semantics.models.framework import is_admissible
from python_af_semantics.models.framework import is_conflict_free
from python_af_semantics.models.framework import lift
from python_af_semantics.models.framework import range_closure
from python_af_semantics.models.framework import reduct
from python_af_semantics.models.framework import restrict
from python_af_semantics.models.framework import targets_of
from python_af_semantics.models.framework import UnknownLabelError

FRAMEWORK_LOGGER = 'python_af_semantics.models.framework'


class TestArgSet:
    def test_members_and_size(self):
        subset = ArgSet.from_indices([0, 2], 3)

        assert subset.bits == 0b101
        assert len(subset) == 2
        assert list(subset) == [0, 2]
        assert 2 in subset
        assert 1 not in subset

    def test_set_algebra(self):
        left = ArgSet(0b011, 3)
        right = ArgSet(0b110, 3)

        assert (left | right).bits == 0b111
        assert (left & right).bits == 0b010
        assert (left - right).bits == 0b001
        assert ArgSet(0b010, 3).issubset(left)
        assert not left.isdisjoint(right)

    def test_rejects_bits_outside_width(self):
        with pytest.raises(FrameworkError):
            ArgSet(0b1000, 3)
        with pytest.raises(FrameworkError):
            ArgSet.from_indices([3], 3)

    def test_rejects_mixed_widths(self):
        with pytest.raises(FrameworkError):
            ArgSet(1, 2) | ArgSet(1, 3)

    def test_sort_key_orders_by_cardinality_first(self):
        sets = [ArgSet(0b100, 3), ArgSet(0b011, 3), ArgSet(0, 3)]
        ordered = sorted(sets, key=lambda s: s.sort_key)
        assert [s.bits for s in ordered] == [0, 0b100, 0b011]


class TestExtensionSet:
    def test_from_bits_is_canonical_and_deduplicated(self):
        sets = ExtensionSet.from_bits([0b101, 0, 0b001, 0b101, 0b100], 3)
        assert [m.bits for m in sets] == [0, 0b001, 0b100, 0b101]

    def test_rejects_unordered_members(self):
        with pytest.raises(FrameworkError):
            ExtensionSet((ArgSet(1, 2), ArgSet(0, 2)), 2)

    def test_membership_union_and_difference(self, f2):
        sets = ExtensionSet.of([f2.set_of('a'), f2.set_of('c')], 3)
        other = ExtensionSet.of([f2.set_of('c')], 3)

        assert f2.set_of('a') in sets
        assert f2.set_of('b') not in sets
        assert sets.union() == f2.set_of('a', 'c')
        assert sets.difference(other).labels(f2) == [('a',)]
        assert other.issubset(sets)
        assert not sets.issubset(other)


class TestBuildFramework:
    def test_builds_f1(self, f1):
        assert f1.arg_count == 2
        assert len(f1.attacks) == 2
        assert f1.labels == ('a', 'b')

    def test_empty_framework(self):
        framework = build_framework([], [])
        assert framework.arg_count == 0
        assert framework.attacks == frozenset()

    def test_builds_f3(self, f3):
        assert f3.arg_count == 4
        assert len(f3.attacks) == 4

    def test_deduplicates_attacks(self):
        framework = build_framework(['a', 'b'], [('a', 'b'), ('a', 'b')])
        assert framework.attacks == frozenset({(0, 1)})

    def test_keeps_self_attacks(self, f1):
        assert (0, 0) in f1.attacks

    def test_duplicate_label(self):
        with pytest.raises(DuplicateLabelError) as exc_info:
            build_framework(['a', 'a'], [])
        assert exc_info.value.label == 'a'

    def test_unknown_label(self):
        with pytest.raises(UnknownLabelError) as exc_info:
            build_framework(['a'], [('a', 'z')])
        assert exc_info.value.label == 'z'

    def test_adjacency_mirrors_attacks(self, f3):
        for x in range(f3.arg_count):
            for y in range(f3.arg_count):
                forward = bool(f3.successors[x] >> y & 1)
                backward = bool(f3.predecessors[y] >> x & 1)
                assert forward == backward == ((x, y) in f3.attacks)

    def test_subsets_in_canonical_order(self, f2):
        keys = [subset.sort_key for subset in f2.subsets()]
        assert len(keys) == 8
        assert keys == sorted(keys)


class TestPrimitives:
    def test_attackers_of(self, f1, f3):
        assert attackers_of(f1, f1.set_of('b')) == f1.set_of('a')
        assert attackers_of(f3, f3.set_of('d')) == f3.set_of('b')
        assert attackers_of(f3, f3.empty_set()) == f3.empty_set()

    def test_attackers_of_matches_scan(self, f3):
        for subset in f3.subsets():
            expected = {
                x for x, y in f3.attacks if y in subset
            }
            assert set(attackers_of(f3, subset)) == expected

    def test_targets_and_attacks_set(self, f2):
        assert targets_of(f2, f2.set_of('a', 'b')) == f2.set_of('b', 'c')
        assert attacks_set(f2, f2.set_of('a'), f2.set_of('b', 'c'))
        assert not attacks_set(f2, f2.set_of('c'), f2.full_set())

    def test_range_closure(self, f2, f3):
        assert range_closure(f2, f2.set_of('c')) == (
            f2.empty_set(), f2.set_of('c'),
        )
        assert range_closure(f2, f2.empty_set()) == (
            f2.empty_set(), f2.empty_set(),
        )
        assert range_closure(f3, f3.set_of('a', 'd')) == (
            f3.set_of('b'), f3.set_of('a', 'b', 'd'),
        )

    def test_is_conflict_free(self, f1, f2):
        assert not is_conflict_free(f1, f1.set_of('a'))
        assert is_conflict_free(f1, f1.empty_set())
        assert is_conflict_free(f2, f2.set_of('a', 'c'))

    def test_is_admissible(self, f1, f2):
        assert not is_admissible(f1, f1.set_of('b'))
        assert is_admissible(f1, f1.empty_set())
        assert is_admissible(f2, f2.set_of('a', 'c'))
        assert not is_admissible(f2, f2.set_of('c'))

    def test_admissible_implies_conflict_free(self, f3):
        for subset in f3.subsets():
            if is_admissible(f3, subset):
                assert is_conflict_free(f3, subset)

    def test_check_set_rejects_foreign_sets(self, f2):
        with pytest.raises(FrameworkError):
            is_conflict_free(f2, ArgSet(0, 2))


class TestRestrictAndReduct:
    def test_restrict_keeps_arguments(self, f2):
        restricted = restrict(f2, f2.set_of('a', 'b'))
        assert restricted.labels == ('a', 'b', 'c')
        assert restricted.attacks == frozenset({(0, 1)})

    def test_restrict_by_empty_set(self, f2):
        assert restrict(f2, f2.empty_set()).attacks == frozenset()

    def test_restrict_by_full_set(self, f1):
        assert restrict(f1, f1.full_set()) == f1

    def test_restriction_preserves_admissibility(self, f2):
        for extension in f2.subsets():
            if not is_admissible(f2, extension):
                continue
            for other in f2.subsets():
                assert is_admissible(restrict(f2, extension | other), extension)

    def test_reduct_of_f2(self, f2):
        sub = reduct(f2, f2.set_of('c'))
        assert sub.labels == ('a', 'b')
        assert sub.attacks == frozenset({(0, 1)})
        assert sub.origin == (0, 1)

    def test_reduct_by_empty_set(self, f3):
        assert reduct(f3, f3.empty_set()) is f3

    def test_reduct_of_f3(self, f3):
        sub = reduct(f3, f3.set_of('d'))
        assert sub.labels == ('a', 'b', 'c')
        assert sub.attacks == frozenset({(0, 1), (1, 2), (2, 0)})

    def test_reduct_size(self, f3):
        for extension in f3.subsets():
            _, oplus = range_closure(f3, extension)
            sub = reduct(f3, extension)
            assert sub.arg_count == f3.arg_count - len(oplus)
            if extension.bits:
                assert sub.arg_count < f3.arg_count

    def test_nested_reduct_keeps_origin(self):
        framework = build_framework(
            ['a', 'b', 'c', 'd', 'e'], [('a', 'b'), ('c', 'd')],
        )
        first = reduct(framework, framework.set_of('a'))
        second = reduct(first, first.set_of('c'))
        assert second.labels == ('e',)
        assert second.origin == (4,)

    def test_lift(self, f3):
        sub = reduct(f3, f3.set_of('d'))
        lifted = lift(sub, sub.set_of('b', 'c'), f3)
        assert lifted == f3.set_of('b', 'c')

    def test_reduct_skips_label_lookup_without_debug(self, f3, caplog, mocker):
        caplog.set_level(logging.INFO, logger=FRAMEWORK_LOGGER)
        labels = mocker.patch.object(ArgSet, 'labels', autospec=True)
        reduct(f3, f3.set_of('d'))
        labels.assert_not_called()

    def test_reduct_logs_at_debug(self, f3, caplog):
        caplog.set_level(logging.DEBUG, logger=FRAMEWORK_LOGGER)
        reduct(f3, f3.set_of('d'))
        assert "Reduct by ('d',) keeps 3 of 4 arguments" in caplog.text

    def test_framework_rejects_out_of_range_attack(self):
        with pytest.raises(FrameworkError):
            Framework(labels=('a',), attacks=frozenset({(0, 1)}))
