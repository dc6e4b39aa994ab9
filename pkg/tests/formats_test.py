from __future__ import annotations

import json

import pytest
from python_af_semantics.formats.parsers import FrameworkSyntaxError
from python_af_semantics.formats.parsers import MissingSeparatorError
from python_af_semantics.formats.parsers import parse_apx
from python_af_semantics.formats.parsers import parse_tgf
from python_af_semantics.formats.render import format_extension
from python_af_semantics.formats.render import render_af
from python_af_semantics.formats.render import render_extensions
from python_af_semantics.formats.render import render_tgf
from python_af_semantics.formats.render import RenderFormat
from python_af_semantics.generators.random_af import derive_configs
from python_af_semantics.generators.random_af import random_af
from python_af_semantics.models.framework import DuplicateLabelError
from python_af_semantics.models.framework import ExtensionSet
from python_af_semantics.models.framework import UnknownLabelError
from python_af_semantics.semantics.engine import enumerate_weakly_admissible

F1_APX = 'arg(a).\narg(b).\natt(a,a).\natt(a,b).\n'


class TestParseApx:
    def test_parses_f1(self, f1):
        assert parse_apx(F1_APX) == f1

    def test_empty_input(self):
        framework = parse_apx('')
        assert framework.arg_count == 0

    def test_arguments_declared_after_attacks(self, f2):
        text = 'att(a,b).\natt(b,c).\narg(a).\narg(b).\narg(c).\n'
        assert parse_apx(text) == f2

    def test_skips_comments_and_whitespace(self, f2):
        text = (
            '% a chain\n'
            '\n'
            '  arg( a ).\n'
            'arg(b) .\n'
            'arg(c).\n'
            'att( a , b ).\n'
            'att(b,c).\n'
        )
        assert parse_apx(text) == f2

    def test_syntax_error_reports_line(self):
        with pytest.raises(FrameworkSyntaxError) as exc_info:
            parse_apx('arg(a).\nattack(a,a).\n')
        assert exc_info.value.line_number == 2
        assert exc_info.value.text == 'attack(a,a).'

    def test_missing_period(self):
        with pytest.raises(FrameworkSyntaxError):
            parse_apx('arg(a)\n')

    def test_duplicate_argument(self):
        with pytest.raises(DuplicateLabelError):
            parse_apx('arg(a).\narg(a).\n')

    def test_undeclared_attack_endpoint(self):
        with pytest.raises(UnknownLabelError):
            parse_apx('att(a,b).')

    def test_unknown_argument(self):
        with pytest.raises(UnknownLabelError) as exc_info:
            parse_apx('arg(a).\natt(a,x).\n')
        assert exc_info.value.label == 'x'


class TestParseTgf:
    def test_parses_f2(self, f2):
        assert parse_tgf('a\nb\nc\n#\na b\nb c\n') == f2

    def test_only_separator(self):
        assert parse_tgf('#\n').arg_count == 0

    def test_deduplicates_edges(self, f2):
        assert parse_tgf('a\nb\nc\n#\na b\na b\nb c') == f2

    def test_node_labels(self):
        framework = parse_tgf('1 a\n2 b\n#\n1 2\n')
        assert framework.labels == ('a', 'b')
        assert framework.attacks == frozenset({(0, 1)})

    def test_tab_separated_node_label(self):
        framework = parse_tgf('1\ta\n2\tb\n#\n1 2\n')
        assert framework.labels == ('a', 'b')

    def test_labelled_nodes_render_as_apx(self):
        framework = parse_tgf('1 my_arg  \n2\n#\n1 2\n')
        assert parse_apx(render_af(framework)) == framework

    @pytest.mark.parametrize(
        'text', ['1 my arg\n2\n#\n1 2\n', 'a-1\n#\n', '1 b(c)\n#\n'],
    )
    def test_rejects_names_apx_cannot_hold(self, text):
        with pytest.raises(FrameworkSyntaxError) as exc_info:
            parse_tgf(text)
        assert exc_info.value.line_number == 1

    def test_missing_separator(self):
        with pytest.raises(MissingSeparatorError):
            parse_tgf('a\nb\n')

    def test_unknown_node(self):
        with pytest.raises(UnknownLabelError):
            parse_tgf('a\n#\na z\n')

    def test_malformed_edge(self):
        with pytest.raises(FrameworkSyntaxError) as exc_info:
            parse_tgf('a\nb\n#\na b c\n')
        assert exc_info.value.line_number == 4

    def test_duplicate_node(self):
        with pytest.raises(DuplicateLabelError):
            parse_tgf('a\na\n#\n')


class TestRender:
    def test_render_apx(self, f1):
        assert render_af(f1) == F1_APX
        assert render_af(f1, 'text') == F1_APX

    def test_render_json(self, f1):
        rendered = render_af(f1, RenderFormat.JSON)
        assert rendered == (
            '{"arguments":["a","b"],"attacks":[["a","a"],["a","b"]]}'
        )
        assert json.loads(rendered)['arguments'] == ['a', 'b']

    def test_render_json_examples(self, f2):
        assert render_af(parse_apx(''), 'json') == '{"arguments":[],"attacks":[]}'
        assert render_af(f2, 'json') == (
            '{"arguments":["a","b","c"],"attacks":[["a","b"],["b","c"]]}'
        )

    def test_render_tgf(self, f2):
        assert render_tgf(f2) == 'a\nb\nc\n#\na b\nb c\n'

    def test_render_extensions_text(self, f1, f2):
        assert render_extensions(
            ExtensionSet.from_bits([0], 2), f1,
        ) == '{}\n'
        assert render_extensions(
            enumerate_weakly_admissible(f1), f1,
        ) == '{}\n{b}\n'
        assert render_extensions(
            enumerate_weakly_admissible(f2), f2,
        ) == '{}\n{a}\n{c}\n{a,c}\n'

    def test_render_extensions_json(self, f2):
        assert render_extensions(
            enumerate_weakly_admissible(f2), f2, 'json',
        ) == '[[],["a"],["c"],["a","c"]]'

    def test_no_extensions_renders_nothing(self, f2):
        assert render_extensions(ExtensionSet((), 3), f2) == ''

    def test_json_extension_examples(self, f2):
        assert render_extensions(ExtensionSet((), 3), f2, 'json') == '[]'
        assert render_extensions(
            ExtensionSet.of([f2.set_of('a', 'c')], 3), f2, 'json',
        ) == '[["a","c"]]'

    def test_format_extension(self):
        assert format_extension(()) == '{}'
        assert format_extension(('a', 'c')) == '{a,c}'

    def test_unknown_format(self, f1):
        with pytest.raises(ValueError):
            render_af(f1, 'yaml')


class TestRoundTrip:
    def test_generated_frameworks(self):
        for cfg in derive_configs(500, 0, 20, (0.1, 0.3, 0.6), seed=99):
            framework = random_af(cfg)
            rendered = render_af(framework)
            assert parse_apx(rendered) == framework
            assert render_af(parse_apx(rendered)) == rendered
            assert parse_tgf(render_tgf(framework)) == framework
