import math

import pytest

from conftest import trial_division
from gkrecog.arith import is_prime
from gkrecog.catalog import GroupId, GroupSpecError, order, order_value, out_order, parse_group, pi
from gkrecog.sporadic import SPORADIC_ORDERS, TITS


def direct_order(g: GroupId) -> int:
    """Textbook order formulas multiplied out as plain integers."""
    n, q = g.n, g.q
    fam = g.family
    prod = math.prod
    if fam == "Alt":
        return math.factorial(n) // 2
    if fam == "L":
        return q ** (n * (n - 1) // 2) * prod(q**i - 1 for i in range(2, n + 1)) // math.gcd(n, q - 1)
    if fam == "U":
        return q ** (n * (n - 1) // 2) * prod(q**i - (-1) ** i for i in range(2, n + 1)) // math.gcd(n, q + 1)
    if fam in ("S", "O"):
        m = n // 2
        return q ** (m * m) * prod(q ** (2 * i) - 1 for i in range(1, m + 1)) // math.gcd(2, q - 1)
    if fam in ("O+", "O-"):
        m = n // 2
        e = 1 if fam == "O+" else -1
        return q ** (m * (m - 1)) * (q**m - e) * prod(q ** (2 * i) - 1 for i in range(1, m)) // math.gcd(4, q**m - e)
    if fam == "G2":
        return q**6 * (q**6 - 1) * (q**2 - 1)
    if fam == "F4":
        return q**24 * (q**12 - 1) * (q**8 - 1) * (q**6 - 1) * (q**2 - 1)
    if fam == "E6":
        return q**36 * prod(q**i - 1 for i in (12, 9, 8, 6, 5, 2)) // math.gcd(3, q - 1)
    if fam == "2E6":
        return q**36 * (q**12 - 1) * (q**9 + 1) * (q**8 - 1) * (q**6 - 1) * (q**5 + 1) * (q**2 - 1) // math.gcd(3, q + 1)
    if fam == "E7":
        return q**63 * prod(q**i - 1 for i in (18, 14, 12, 10, 8, 6, 2)) // math.gcd(2, q - 1)
    if fam == "E8":
        return q**120 * prod(q**i - 1 for i in (30, 24, 20, 18, 14, 12, 8, 2))
    if fam == "3D4":
        return q**12 * (q**8 + q**4 + 1) * (q**6 - 1) * (q**2 - 1)
    if fam == "2B2":
        return q**2 * (q**2 + 1) * (q - 1)
    if fam == "2G2":
        return q**3 * (q**3 + 1) * (q - 1)
    if fam == "2F4":
        return q**12 * (q**6 + 1) * (q**4 - 1) * (q**3 + 1) * (q - 1)
    raise AssertionError(fam)


def test_parse_examples():
    assert parse_group("2E6(3)") == GroupId("2E6", q=3)
    assert parse_group("Alt(757)") == GroupId("Alt", 757)
    assert parse_group("l(2,3^9)") == GroupId("L", 2, 19683)
    assert parse_group(" o+(8, 27) ") == GroupId("O+", 8, 27)
    assert parse_group("m11") == GroupId("Spor", name="M11")
    assert parse_group("T") == GroupId("Spor", name=TITS)


def test_parse_l24_flags_isomorphisms():
    g = parse_group("L(2,4)")
    assert g == GroupId("L", 2, 4)
    assert set(g.isomorphs) == {GroupId("L", 2, 5), GroupId("Alt", 5)}
    assert g.canonical() == GroupId("Alt", 5)
    assert order(g) == order(GroupId("L", 2, 5)) == order(GroupId("Alt", 5))


@pytest.mark.parametrize(
    "spec, fragment",
    [
        ("L(2,3)", "solvable"),
        ("L(2,2)", "solvable"),
        ("U(3,2)", "solvable"),
        ("L(2,6)", "prime power"),
        ("2B2(2)", "2^(2k+1)"),
        ("2B2(4)", "2^(2k+1)"),
        ("2G2(3)", "3^(2k+1)"),
        ("2F4(2)", "Tits"),
        ("S(4,2)", "not simple"),
        ("G2(2)", "not simple"),
        ("O+(4,3)", "2m >= 6"),
        ("Alt(4)", "n >= 5"),
        ("L(2,", "cannot parse"),
        ("Xyz", "cannot parse"),
    ],
)
def test_parse_rejects(spec, fragment):
    with pytest.raises(GroupSpecError, match=fragment.replace("(", r"\(").replace(")", r"\)").replace("^", r"\^").replace("+", r"\+")):
        parse_group(spec)


@pytest.mark.parametrize(
    "spec, target",
    [("G2(2)'", "U(3,3)"), ("S(4,2)'", "Alt(6)"), ("2G2(3)'", "L(2,8)"), ("2F4(2)'", "T")],
)
def test_derived_subgroups_redirect(spec, target):
    assert parse_group(spec) == parse_group(target)


@pytest.mark.parametrize(
    "a, b",
    [("L(2,9)", "Alt(6)"), ("L(4,2)", "Alt(8)"), ("L(3,2)", "L(2,7)"), ("U(4,2)", "S(4,3)"),
     ("O(5,7)", "S(4,7)"), ("O-(6,5)", "U(4,5)"), ("O+(6,3)", "L(4,3)"), ("O-(4,3)", "L(2,9)"),
     ("O(7,4)", "S(6,4)"), ("U(2,7)", "L(2,7)")],
)
def test_isomorphic_names_share_canonical_form_and_order(a, b):
    ga, gb = parse_group(a), parse_group(b)
    assert ga.canonical() == gb.canonical()
    assert order(ga) == order(gb)


def test_order_examples():
    assert order(GroupId("Alt", 5)).as_dict() == {2: 2, 3: 1, 5: 1}
    assert pi(parse_group("E6(3)")) == (2, 3, 5, 7, 11, 13, 41, 73, 757)
    assert pi(parse_group("2E6(3)")) == (2, 3, 5, 7, 13, 19, 37, 41, 61, 73)
    assert order(parse_group("3D4(3)")).valuation(73) == 1
    assert order(parse_group("L(2,73)")).as_dict() == trial_division(194472) == {2: 3, 3: 2, 37: 1, 73: 1}


def test_pi_examples():
    assert 73 in pi(parse_group("F4(3)"))
    assert 71 in pi(parse_group("Alt(74)"))
    assert 17 in pi(parse_group("Alt(757)"))


@pytest.mark.parametrize(
    "spec, value",
    [
        ("M11", 7920), ("M12", 95040), ("J1", 175560), ("L(2,7)", 168), ("U(3,3)", 6048),
        ("S(4,3)", 25920), ("G2(2)'", 6048), ("Alt(8)", 20160), ("M22", 443520), ("J2", 604800),
        ("HS", 44352000), ("McL", 898128000), ("He", 4030387200), ("T", 17971200),
        ("Co1", 4157776806543360000), ("Ly", 51765179004000000),
        ("M", 808017424794512875886459904961710757005754368000000000),
        ("B", 4154781481226426191177580544000000),
        ("Fi24'", 1255205709190661721292800), ("J4", 86775571046077562880),
        ("Th", 90745943887872000), ("Fi23", 4089470473293004800), ("HN", 273030912000000),
        ("ON", 460815505920), ("Suz", 448345497600), ("Ru", 145926144000), ("Co2", 42305421312000),
        ("Co3", 495766656000), ("Fi22", 64561751654400), ("J3", 50232960), ("M23", 10200960),
        ("M24", 244823040),
        ("E6(2)", 214841575522005575270400),
        ("2F4(8)", 264905352699586176614400),
    ],
)
def test_known_orders(spec, value):
    assert order(parse_group(spec)).value() == value


def test_sporadic_table_is_self_validating():
    assert len(SPORADIC_ORDERS) == 27
    for entries in SPORADIC_ORDERS.values():
        assert all(is_prime(p) for p, _ in entries)


LIE_SAMPLES = [
    GroupId(fam, n, q)
    for fam, ns in [("L", (2, 3, 5, 8)), ("U", (3, 4, 7)), ("S", (4, 6, 10)), ("O", (7, 9)), ("O+", (8, 12)), ("O-", (8, 10))]
    for n in ns
    for q in (2, 3, 4, 5, 7, 8, 9, 27)
    if (fam, n, q) not in (("L", 2, 2), ("L", 2, 3), ("U", 3, 2), ("S", 4, 2)) and not (fam == "O" and q % 2 == 0)
] + [GroupId(fam, q=q) for fam in ("G2", "F4", "E6", "2E6", "E7", "E8", "3D4") for q in (2, 3, 4, 5, 27) if (fam, q) != ("G2", 2)] + [
    GroupId("2B2", q=8), GroupId("2B2", q=32), GroupId("2G2", q=27), GroupId("2G2", q=243), GroupId("2F4", q=8)
]


@pytest.mark.parametrize("g", LIE_SAMPLES, ids=str)
def test_order_matches_direct_formula(g):
    f = order(g)
    value = direct_order(g)
    assert f.value() == value == order_value(g)
    for p in f.primes():
        assert value % p == 0


@pytest.mark.parametrize("fam, n", [("L", 2), ("L", 4), ("U", 3), ("S", 6), ("O+", 8), ("O-", 8)])
def test_order_monotone_in_q(fam, n):
    values = [order(GroupId(fam, n, q)).value() for q in (2, 3, 4, 5) if (fam, n, q) not in (("L", 2, 2), ("L", 2, 3), ("U", 3, 2))]
    assert values == sorted(values)


@pytest.mark.parametrize("fam", ["G2", "F4", "E6", "2E6", "E7", "E8", "3D4"])
def test_exceptional_order_monotone_in_q(fam):
    qs = [q for q in (2, 3, 4, 5) if (fam, q) != ("G2", 2)]
    values = [order(GroupId(fam, q=q)).value() for q in qs]
    assert values == sorted(values)


def test_out_order():
    assert out_order(parse_group("E6(3)")) == 2
    assert out_order(parse_group("2E6(3)")) == 2
    with pytest.raises(GroupSpecError, match="unsupported group"):
        out_order(parse_group("Alt(5)"))


def test_str_round_trips_through_parser():
    for g in LIE_SAMPLES + [GroupId("Alt", 9), GroupId("Spor", name="Fi24'"), GroupId("Spor", name=TITS)]:
        assert parse_group(str(g)) == g
