"""
*Obstacle certificates*: vertex-set witnesses forcing a lower bound on the pathwidth of a semicomplete digraph.

    - *Degree tangle* `(d, l, k)`: `l` vertices whose out-degrees lie in `[d, d + k]`.
    - *Matching tangle* `(d, l, k)`: `l` edges `u -> φ(u)` with `d+(u) <= d` and `d+(φ(u)) >= d + k + 1`.
    - *Spider* `(d, l, w)`: at least `l` vertices `v`, each with `>= 3l` in-neighbors of out-degree `<= d` (`L_v`) and
      `>= 3l` out-neighbors of out-degree `>= d + w` (`R_v`).
    - *Disjoint paths* `(d, k)`: pairwise vertex-disjoint directed paths from out-degree `<= d` to out-degree
      `>= d + k`.

Certificates are stored in JSON objects with a `kind` field, for example:
```
{"kind": "degree-tangle", "d": 2, "l": 5, "k": 1, "t": [0, 3, 4, 6, 7]}
{"kind": "matching-tangle", "d": 1, "l": 2, "k": 1, "phi": [[0, 5], [2, 6]]}
{"kind": "spider", "d": 2, "l": 1, "w": 1, "legs": [{"v": 4, "L": [0, 1, 2], "R": [5, 6, 7]}]}
{"kind": "disjoint-paths", "d": 1, "k": 2, "paths": [[0, 3, 5], [1, 6]]}
```
"""

import dataclasses
import json
import typing
from shared import custom_exception
from shared import param_validators as shared_param_val


Vertices = typing.Tuple[int, ...]


@dataclasses.dataclass(frozen=True)
class DegreeTangle:
    """
    Attributes:
        d (int): Lowest allowed out-degree.
        l (int): Tangle size.
        k (int): Width of the out-degree window.
        t (Vertices): Tangle vertices.
    """

    d: int
    l: int
    k: int
    t: Vertices


@dataclasses.dataclass(frozen=True)
class MatchingTangle:
    """
    Attributes:
        d (int): Out-degree threshold of the low side.
        l (int): Matching size.
        k (int): Out-degree gap, the high side has out-degree at least `d + k + 1`.
        phi (typing.Tuple[typing.Tuple[int, int], ...]): Matching edges `(u, φ(u))`.
    """

    d: int
    l: int
    k: int
    phi: typing.Tuple[typing.Tuple[int, int], ...]

    @property
    def t1(self) -> Vertices:
        return tuple(u for u, _ in self.phi)

    @property
    def t2(self) -> Vertices:
        return tuple(v for _, v in self.phi)


@dataclasses.dataclass(frozen=True)
class SpiderLeg:
    """
    Attributes:
        v (int): Body vertex.
        left (Vertices): Set `L_v`.
        right (Vertices): Set `R_v`.
    """

    v: int
    left: Vertices
    right: Vertices


@dataclasses.dataclass(frozen=True)
class Spider:
    """
    Attributes:
        d (int): Out-degree bound of the left sets.
        l (int): Size parameter.
        w (int): Out-degree gap, the right sets have out-degree at least `d + w`.
        legs (typing.Tuple[SpiderLeg, ...]): One leg per body vertex.
    """

    d: int
    l: int
    w: int
    legs: typing.Tuple[SpiderLeg, ...]

    @property
    def t(self) -> Vertices:
        return tuple(leg.v for leg in self.legs)


@dataclasses.dataclass(frozen=True)
class DisjointPaths:
    """
    Attributes:
        d (int): Out-degree bound of the path starts.
        k (int): Out-degree gap, the path ends have out-degree at least `d + k`.
        paths (typing.Tuple[Vertices, ...]): Directed paths as vertex sequences.
    """

    d: int
    k: int
    paths: typing.Tuple[Vertices, ...]


Certificate = typing.Union[DegreeTangle, MatchingTangle, Spider, DisjointPaths]

CERTIFICATE_KINDS: typing.Final[typing.Dict[type, str]] = {
    DegreeTangle: "degree-tangle",
    MatchingTangle: "matching-tangle",
    Spider: "spider",
    DisjointPaths: "disjoint-paths",
}


@dataclasses.dataclass(frozen=True)
class Verdict:
    """
    Outcome of a certificate verification.

    Attributes:
        valid (bool): Every defining condition holds.
        lower_bound (typing.Optional[int]): Implied pathwidth lower bound, `None` when invalid.
        violation (typing.Optional[str]): First violated condition, `None` when valid.
    """

    valid: bool
    lower_bound: typing.Optional[int] = None
    violation: typing.Optional[str] = None


@dataclasses.dataclass(frozen=True)
class SpiderVerdict(Verdict):
    """
    Spider verdict. <lower_bound> is `min{l, w}`, the bound implied by the disjoint paths a spider contains, and
    <stated_bound> is the strict form `min{l, w} + 1`, which does not hold for every spider and is informational only.

    Attributes:
        stated_bound (typing.Optional[int]): `min{l, w} + 1` for valid spiders.
    """

    stated_bound: typing.Optional[int] = None


def certificate_kind(certificate: Certificate) -> str:
    shared_param_val.type_check(certificate, tuple(CERTIFICATE_KINDS))
    return CERTIFICATE_KINDS[type(certificate)]


def certificate_to_dict(certificate: Certificate) -> typing.Dict[str, typing.Any]:
    """
    Converts <certificate> into its JSON object.

    Args:
        certificate (Certificate): Certificate.

    Returns (typing.Dict[str, typing.Any]): JSON-compatible dictionary with the `kind` field first.
    """
    kind = certificate_kind(certificate)
    if isinstance(certificate, DegreeTangle):
        body = {"d": certificate.d, "l": certificate.l, "k": certificate.k, "t": list(certificate.t)}
    elif isinstance(certificate, MatchingTangle):
        body = {"d": certificate.d, "l": certificate.l, "k": certificate.k, "phi": [list(e) for e in certificate.phi]}
    elif isinstance(certificate, Spider):
        legs = [{"v": leg.v, "L": list(leg.left), "R": list(leg.right)} for leg in certificate.legs]
        body = {"d": certificate.d, "l": certificate.l, "w": certificate.w, "legs": legs}
    else:
        body = {"d": certificate.d, "k": certificate.k, "paths": [list(path) for path in certificate.paths]}
    return {"kind": kind, **body}


def format_certificate(certificate: Certificate) -> str:
    return json.dumps(certificate_to_dict(certificate), sort_keys=False) + "\n"


def _field(payload: typing.Dict[str, typing.Any], name: str, expected: type) -> typing.Any:
    if name not in payload:
        raise custom_exception.GraphFormatError(f"certificate field `{name}` is missing")
    value = payload[name]
    if not isinstance(value, expected) or isinstance(value, bool):
        raise custom_exception.GraphFormatError(f"certificate field `{name}` has to be {expected.__name__}")
    return value


def _vertices(value: typing.Any, name: str) -> Vertices:
    if not isinstance(value, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in value):
        raise custom_exception.GraphFormatError(f"certificate field `{name}` has to be a list of vertices")
    return tuple(value)


def certificate_from_dict(payload: typing.Any) -> Certificate:
    """
    Builds a certificate from its JSON object. Only the shape is checked here, the verifiers judge the content.

    Args:
        payload (typing.Any): Parsed JSON value.

    Returns (Certificate): Certificate.

    Exceptions:
        GraphFormatError: On unknown kind, missing field or wrongly typed field.
    """
    if not isinstance(payload, dict):
        raise custom_exception.GraphFormatError("certificate has to be a JSON object")
    kind = _field(payload, "kind", str)
    if kind == "degree-tangle":
        return DegreeTangle(
            d=_field(payload, "d", int),
            l=_field(payload, "l", int),
            k=_field(payload, "k", int),
            t=_vertices(_field(payload, "t", list), "t"),
        )
    if kind == "matching-tangle":
        phi = []
        for edge in _field(payload, "phi", list):
            pair = _vertices(edge, "phi")
            if len(pair) != 2:
                raise custom_exception.GraphFormatError("every `phi` entry has to be a pair `[u, v]`")
            phi.append((pair[0], pair[1]))
        return MatchingTangle(
            d=_field(payload, "d", int), l=_field(payload, "l", int), k=_field(payload, "k", int), phi=tuple(phi)
        )
    if kind == "spider":
        legs = []
        for leg in _field(payload, "legs", list):
            if not isinstance(leg, dict):
                raise custom_exception.GraphFormatError("every spider leg has to be a JSON object")
            legs.append(
                SpiderLeg(
                    v=_field(leg, "v", int),
                    left=_vertices(_field(leg, "L", list), "L"),
                    right=_vertices(_field(leg, "R", list), "R"),
                )
            )
        return Spider(
            d=_field(payload, "d", int), l=_field(payload, "l", int), w=_field(payload, "w", int), legs=tuple(legs)
        )
    if kind == "disjoint-paths":
        paths = tuple(_vertices(path, "paths") for path in _field(payload, "paths", list))
        return DisjointPaths(d=_field(payload, "d", int), k=_field(payload, "k", int), paths=paths)
    raise custom_exception.GraphFormatError(f"unknown certificate kind `{kind}`")


def parse_certificate(text: str) -> Certificate:
    """
    Parses a certificate JSON text.

    Args:
        text (str): JSON text.

    Returns (Certificate): Certificate.

    Exceptions:
        GraphFormatError: On invalid JSON or an invalid certificate object.
    """
    shared_param_val.type_check(text, str)
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as error:
        raise custom_exception.GraphFormatError(error.msg, line_no=error.lineno) from error
    return certificate_from_dict(payload)
