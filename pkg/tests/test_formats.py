import pytest

from biinc import formats
from biinc.errors import ParseError

ROUND_TRIPS = [
    ("perm", "2 6 1 3 7 4 5 8 10 9"),
    ("perm", "1"),
    ("step", "alpha=1,4,1,3,1 beta=1,1,3,4,1"),
    ("step", "alpha=5 beta=5"),
    ("parallelogram", "gamma=1,3,0,2,0 delta=0,0,2,3,1"),
    ("parallelogram", "gamma=1 delta=1"),
    ("skew", "outer=5,4,4,4,3,3 inner=3,3,1,1,1"),
    ("skew", "outer=2,2 inner="),
    ("staircase", "n=10 lambda=9,5,4,4,4,1,1,1,1"),
    ("staircase", "n=3 lambda="),
    ("dyck", "UDUUUUDUDDDUUUDDDDUD"),
    ("motzkin2", "ubsusddsud"),
    ("motzkin2", ""),
]


@pytest.mark.parametrize("kind,payload", ROUND_TRIPS)
def test_round_trip(kind, payload):
    obj = formats.parse(kind, payload)
    assert formats.kind_of(obj) == kind
    assert formats.serialize(obj) == payload
    assert formats.parse(kind, formats.serialize(obj)) == obj


@pytest.mark.parametrize(
    "kind,payload,fragment",
    [
        ("perm", "1 2 x", "perm"),
        ("perm", "1 3", "perm"),
        ("step", "alpha=1,2 beta=2", "step"),
        ("step", "beta=1 alpha=1", "step"),
        ("step", "alpha=a beta=b", "step"),
        ("parallelogram", "gamma=1 delta=2", "parallelogram"),
        ("skew", "outer=1,2 inner=", "skew"),
        ("staircase", "n=two lambda=", "staircase"),
        ("dyck", "UDX", "dyck"),
        ("motzkin2", "uxd", "motzkin2"),
    ],
)
def test_parse_errors_name_the_rule(kind, payload, fragment):
    with pytest.raises(ParseError) as err:
        formats.parse(kind, payload)
    assert fragment in str(err.value)


def test_unknown_kind():
    with pytest.raises(ParseError):
        formats.parse("widget", "1 2 3")
