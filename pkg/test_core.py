"""
Configuration, hardware limits, error payloads and JSON codecs
"""

from fractions import Fraction

import pytest
import yaml

from algebra.polynomials import Poly
from algebra.scalars import QQ, cyclotomic_field
from core import serialization as codec
from core.config_manager import ConfigManager
from core.errors import DomainError, FieldMismatchError, MalformedInputError
from core.hardware_detector import HardwareDetector, PerformanceTier


class TestConfiguration:
    def test_defaults_without_file(self, tmp_path):
        manager = ConfigManager(tmp_path / 'missing.yaml')
        assert manager.get('probe.samples') == 200
        assert manager.get('output_format') == 'json'
        assert manager.get('max_workers') >= 1
        assert manager.get('no.such.key', 'fallback') == 'fallback'

    def test_nested_merge(self, tmp_path):
        path = tmp_path / 'settings.yaml'
        path.write_text(yaml.dump({'probe': {'samples': 50}, 'log_level': 'DEBUG'}))
        manager = ConfigManager(path)
        assert manager.get('probe.samples') == 50
        assert manager.get('probe.max_s') == 5
        assert manager.get('log_level') == 'DEBUG'

    def test_tier_resolves_auto_limits(self, tmp_path):
        path = tmp_path / 'settings.yaml'
        path.write_text(yaml.dump({'performance_tier': 'minimal', 'max_workers': 'auto',
                                   'enumeration_limit': 'auto', 'squarefree_attempts': 'auto'}))
        manager = ConfigManager(path)
        assert manager.get('max_workers') == 1
        assert manager.get('enumeration_limit') == 1000
        assert manager.get('squarefree_attempts') == 32

    def test_unknown_tier_falls_back(self, tmp_path):
        path = tmp_path / 'settings.yaml'
        path.write_text(yaml.dump({'performance_tier': 'ludicrous'}))
        manager = ConfigManager(path)
        assert manager.get('performance_tier') == manager.hardware_detector.recommended_tier.value

    def test_workers_capped(self, tmp_path):
        path = tmp_path / 'settings.yaml'
        path.write_text(yaml.dump({'max_workers': 10_000}))
        manager = ConfigManager(path)
        assert manager.get('max_workers') == manager.hardware_detector.system_info['cpu_count']

    def test_set_and_save(self, tmp_path):
        path = tmp_path / 'out' / 'settings.yaml'
        manager = ConfigManager(path)
        manager.set('probe.samples', 12)
        manager.set_performance_tier('minimal')
        manager.save_config()
        reloaded = ConfigManager(path)
        assert reloaded.get('probe.samples') == 12
        assert reloaded.get('enumeration_limit') == 1000

    def test_system_info(self, tmp_path):
        info = ConfigManager(tmp_path / 'missing.yaml').get_system_info()
        assert set(info['limits']) == {'max_workers', 'enumeration_limit', 'squarefree_attempts'}
        assert 'minimal' in info['tier_options']


class TestHardware:
    def test_tier_configs(self):
        detector = HardwareDetector()
        assert detector.recommended_tier in PerformanceTier
        minimal = detector.get_tier_config(PerformanceTier.MINIMAL)
        assert minimal['max_workers'] == 1
        assert detector.get_recommended_config() == detector.get_tier_config(detector.recommended_tier)


class TestErrors:
    def test_payload(self):
        error = DomainError("bad s", s=Fraction(1, 2), values=[1, 2])
        assert error.to_dict() == {'error': 'domain_error', 'message': 'bad s',
                                   'details': {'s': '1/2', 'values': [1, 2]}}
        assert isinstance(error, ValueError)


class TestSerialization:
    def test_rationals(self):
        assert codec.decode_rational("3/4") == Fraction(3, 4)
        assert codec.decode_rational(-2) == -2
        assert codec.encode_rational(Fraction(6, 4)) == "3/2"
        assert codec.encode_rational(Fraction(4, 2)) == 2
        for bad in ("x", True, 1.5, "1/0"):
            with pytest.raises(MalformedInputError):
                codec.decode_rational(bad)

    def test_load_json(self):
        assert codec.load_json('{"a": 1}') == {'a': 1}
        with pytest.raises(MalformedInputError):
            codec.load_json('{"a": ')

    def test_family_pairs(self, dependent_triple):
        F = codec.family_from_json({'terms': [[-1, 2], [1, 2], [0, 1]]})
        assert F == dependent_triple
        assert codec.family_from_json(codec.family_to_json(F)) == F

    def test_cyclotomic_family(self):
        xi = cyclotomic_field(3).gen()
        F = codec.family_from_json({'terms': [{'shift': {'k': 3, 'coeffs': [0, 1]}, 'exponent': 2},
                                              {'shift': 1, 'exponent': 2}]})
        assert F.field == cyclotomic_field(3)
        assert F.shifts[0] == xi
        assert codec.family_to_json(F)['field'] == {'cyclotomic': 3}

    def test_field_override(self):
        F = codec.family_from_json({'terms': [[0, 1]]}, cyclotomic_field(4))
        assert F.field == cyclotomic_field(4)
        with pytest.raises(FieldMismatchError):
            codec.family_from_json({'field': 'rational', 'terms': [[{'k': 5, 'coeffs': [0, 1]}, 1]]})

    def test_malformed_family(self):
        for bad in ({}, {'terms': 3}, {'terms': [[1]]}, {'terms': [[0, -1]]}, {'terms': [{'shift': 0}]}):
            with pytest.raises(MalformedInputError):
                codec.family_from_json(bad)

    def test_dumps(self):
        text = codec.dumps({'c': Fraction(1, 3), 'p': Poly(QQ, [1, 2])})
        assert text == '{"c": "1/3", "p": [1, 2]}'
