"""
JSON codecs for scalars, polynomials, families, equations and certificates

A rational is an integer or a "p/q" string; a cyclotomic element is
{"k": conductor, "coeffs": [...]} meaning sum coeffs[j] xi^j.
"""

import json
import logging
from fractions import Fraction
from typing import Any, Dict, List, Optional

from algebra.polynomials import Poly
from algebra.scalars import QQ, CycloElement, Field, cyclotomic_field, field_from_tag
from .errors import FieldMismatchError, MalformedInputError, ShiftedPowerError

logger = logging.getLogger(__name__)


def load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedInputError(f"Invalid JSON: {e.msg} at line {e.lineno} column {e.colno}")


def encode_rational(value: Fraction):
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def decode_rational(obj) -> Fraction:
    if isinstance(obj, bool):
        raise MalformedInputError(f"Expected a rational, got {obj!r}")
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, str):
        try:
            return Fraction(obj.strip())
        except (ValueError, ZeroDivisionError):
            raise MalformedInputError(f"Cannot read {obj!r} as a rational")
    raise MalformedInputError(f"Expected an integer or a 'p/q' string, got {obj!r}")


def encode_scalar(value):
    if isinstance(value, CycloElement):
        return {'k': value.field.conductor, 'coeffs': [encode_rational(c) for c in value.coeffs]}
    return encode_rational(value)


def decode_scalar(obj, field: Field = QQ):
    """Read a scalar and place it in field"""
    if isinstance(obj, dict):
        if set(obj) != {'k', 'coeffs'} or not isinstance(obj['coeffs'], list):
            raise MalformedInputError(f"Cyclotomic scalars need exactly 'k' and 'coeffs', got {sorted(obj)}")
        k = obj['k']
        if not isinstance(k, int) or isinstance(k, bool) or k < 1:
            raise MalformedInputError(f"Conductor must be a positive integer, got {k!r}")
        value = cyclotomic_field(k).element([decode_rational(c) for c in obj['coeffs']])
    else:
        value = decode_rational(obj)
    try:
        return field.coerce(value)
    except FieldMismatchError:
        raise
    except (TypeError, ValueError) as e:
        raise MalformedInputError(f"Cannot place {obj!r} in {field!r}: {e}")


def field_to_json(field: Field):
    return "rational" if field.conductor is None else {'cyclotomic': field.conductor}


def field_from_json(obj) -> Field:
    if isinstance(obj, str):
        return field_from_tag(obj)
    if isinstance(obj, dict) and set(obj) == {'cyclotomic'}:
        k = obj['cyclotomic']
        if isinstance(k, int) and not isinstance(k, bool) and k >= 1:
            return cyclotomic_field(k)
    raise MalformedInputError(f"Unknown field description {obj!r}")


def poly_to_json(p: Poly) -> List:
    return [encode_scalar(c) for c in p.coeffs]


def poly_from_json(obj, field: Field = QQ) -> Poly:
    if not isinstance(obj, list):
        raise MalformedInputError(f"A polynomial is a coefficient list, low degree first; got {obj!r}")
    return Poly(field, [decode_scalar(c, field) for c in obj])


def _require(obj: Dict, key: str, kind: str):
    if not isinstance(obj, dict) or key not in obj:
        raise MalformedInputError(f"{kind} needs a '{key}' entry")
    return obj[key]


def _nat(value, name: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise MalformedInputError(f"{name} must be a non-negative integer, got {value!r}")
    return value


def family_to_json(F) -> Dict[str, Any]:
    return {
        'field': field_to_json(F.field),
        'terms': [{'shift': encode_scalar(t.shift), 'exponent': t.exponent} for t in F.terms],
    }


def family_from_json(obj, field: Optional[Field] = None):
    """Terms are {"shift": a, "exponent": e} objects or [a, e] pairs"""
    from family.shifted_powers import Family, ShiftedPower

    terms_obj = _require(obj, 'terms', "A family")
    if not isinstance(terms_obj, list):
        raise MalformedInputError("'terms' must be a list")
    if 'field' in obj:
        field = field_from_json(obj['field'])
    field = field or _infer_field(terms_obj)
    terms = []
    for entry in terms_obj:
        if isinstance(entry, dict):
            shift, exponent = _require(entry, 'shift', "A term"), _require(entry, 'exponent', "A term")
        elif isinstance(entry, list) and len(entry) == 2:
            shift, exponent = entry
        else:
            raise MalformedInputError(f"Cannot read term {entry!r}")
        terms.append(ShiftedPower(decode_scalar(shift, field), _nat(exponent, "exponent")))
    return Family(terms, field)


def _infer_field(terms_obj: List) -> Field:
    for entry in terms_obj:
        shift = entry.get('shift') if isinstance(entry, dict) else (entry[0] if isinstance(entry, list) and entry else None)
        if isinstance(shift, dict) and isinstance(shift.get('k'), int):
            return cyclotomic_field(shift['k'])
    return QQ


def sde_to_json(E) -> Dict[str, Any]:
    return {
        't': E.params.t,
        'k': E.params.k,
        'l': E.params.l,
        'field': field_to_json(E.field),
        'coefficients': [poly_to_json(P) for P in E.coefficients],
    }


def sde_from_json(obj):
    from sde.equations import Sde, SdeParams

    field = field_from_json(obj.get('field', 'rational')) if isinstance(obj, dict) else QQ
    params = SdeParams(*(_nat(_require(obj, key, "An equation"), key) for key in ('t', 'k', 'l')))
    coefficients = _require(obj, 'coefficients', "An equation")
    if not isinstance(coefficients, list):
        raise MalformedInputError("'coefficients' must be a list of polynomials")
    return Sde(params, [poly_from_json(c, field) for c in coefficients])


def certificate_to_json(certificate) -> Dict[str, Any]:
    payload = family_to_json(certificate.family)
    payload['coefficients'] = [encode_scalar(c) for c in certificate.coefficients]
    payload['target'] = poly_to_json(certificate.target)
    return payload


def certificate_from_json(obj):
    """Rebuild a certificate; construction re-verifies it"""
    from construct.families import DependenceCertificate

    family = family_from_json(obj)
    coefficients = [decode_scalar(c, family.field) for c in _require(obj, 'coefficients', "A certificate")]
    target = poly_from_json(obj.get('target', []), family.field)
    return DependenceCertificate(family, coefficients, target)


def dumps(payload: Any, indent: Optional[int] = None) -> str:
    return json.dumps(payload, indent=indent, default=_default)


def _default(value):
    if isinstance(value, (Fraction, CycloElement)):
        return encode_scalar(value)
    if isinstance(value, Poly):
        return poly_to_json(value)
    if isinstance(value, ShiftedPowerError):
        return value.to_dict()
    raise TypeError(f"Cannot serialize {type(value).__name__}")
