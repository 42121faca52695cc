"""Replay of the bundled worked-example vectors.

Every numeric value appearing in the six worked-example writeups behind
the built-in parameter sets is recomputed here and compared against its
source value.  Two cells of the first Z_p^* example's round-1 table are
internally inconsistent in the source (they contradict the stated order
of g_B two lines above); those are carried as erratum checks whose
expected value is the arithmetically forced one, with the printed value
and the reason recorded in the note.

The CLI `vectors` subcommand prints one PASS/FAIL line per check; the
acceptance suite asserts that all checks pass and that the erratum notes
are exactly the expected two.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from . import pairing as pairing_group
from . import scheme_ec, scheme_pairing, scheme_zn
from .eccurve import INFINITY, Point, curve_order, point_order, point_sub, scalar_mul
from .numtheory import element_order
from .scheme_zn import WeakChallengeWarning

__all__ = ["VectorCheck", "all_checks", "SCHEME_SETS"]

SCHEME_SETS = {
    "s1": ("paper-ex1", "paper-ex2"),
    "s2": ("paper-ex1", "paper-ex2"),
    "s3": ("paper-ex1", "paper-ex2"),
}


@dataclass(frozen=True)
class VectorCheck:
    scheme: str
    set_name: str
    name: str
    expected: str
    actual: str
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


def _check(scheme, set_name, name, expected, actual, note=""):
    return VectorCheck(scheme, set_name, name, str(expected), str(actual), note)


def _forall(scheme, set_name, name, domain, predicate, note=""):
    """A quantified identity: passes when predicate holds on the whole domain."""
    bad = [v for v in domain if not predicate(v)]
    expected = "holds on the whole domain"
    actual = expected if not bad else f"fails at {bad[0]}"
    return VectorCheck(scheme, set_name, name, expected, actual, note)


# ------------------------------------------------------------------- s1

# (secrets, publics, share exponents, aggregate) per side, per set.
_S1_DATA = {
    "paper-ex1": {
        "signers": [(3, 6, 9), (7, 3, 10), (9, 7, 5)],
        "u": 5,
        "verifiers": [(6, 1, 4), (8, 5, 9)],
        "v": 6,
        "sigma_exp": 2,
        "zeta_exp": 2,
    },
    "paper-ex2": {
        "signers": [(7, 35, 20), (12, 7, 4), (15, 22, 5), (19, 42, 24), (31, 49, 28)],
        "u": 49,
        "verifiers": [
            (10, 50, 45), (13, 12, 32), (17, 32, 50), (23, 9, 24),
            (51, 43, 44), (27, 29, 42), (36, 21, 3),
        ],
        "v": 37,
        "sigma_exp": 28,
        "zeta_exp": 28,
    },
}


def s1_checks(set_name: str) -> list[VectorCheck]:
    data = _S1_DATA[set_name]
    params = pairing_group.named_params(set_name)
    p, q, g, h = params.p, params.q, params.g, params.h
    out = [
        _check("s1", set_name, "e(g,g)", h, pairing_group.pair(g, g, params)),
    ]
    signer_publics = []
    for i, (secret, public, _) in enumerate(data["signers"], 1):
        member = scheme_pairing.keygen(params, secret=secret)
        signer_publics.append(member.public_point)
        out.append(_check("s1", set_name, f"signer{i}.public", public, member.public_point))
    verifier_publics = []
    for j, (secret, public, _) in enumerate(data["verifiers"], 1):
        member = scheme_pairing.keygen(params, secret=secret)
        verifier_publics.append(member.public_point)
        out.append(_check("s1", set_name, f"verifier{j}.public", public, member.public_point))
    u = scheme_pairing.aggregate_public(signer_publics, params)
    v = scheme_pairing.aggregate_public(verifier_publics, params)
    out.append(_check("s1", set_name, "u", data["u"], u))
    out.append(_check("s1", set_name, "v", data["v"], v))

    # Share values are symbolic in the hash point h1 = c*g; quantify over c.
    cs = range(1, p)
    for i, (secret, _, exp) in enumerate(data["signers"], 1):
        out.append(
            _forall(
                "s1", set_name, f"sigma_{i} == h^({exp}c) for c in [1,{p})", cs,
                lambda c, s=secret, e=exp: pairing_group.pair(
                    c * g % p, s * v % p, params
                ) == pow(h, e * c % p, q),
            )
        )
    for j, (secret, _, exp) in enumerate(data["verifiers"], 1):
        out.append(
            _forall(
                "s1", set_name, f"zeta_{j} == h^({exp}c) for c in [1,{p})", cs,
                lambda c, s=secret, e=exp: pairing_group.pair(
                    c * g % p, s * u % p, params
                ) == pow(h, e * c % p, q),
            )
        )

    def _aggregate(c, secrets, aggregate):
        shares = [
            pairing_group.pair(c * g % p, s * aggregate % p, params) for s in secrets
        ]
        return scheme_pairing.combine_shares(shares, params)

    out.append(
        _forall(
            "s1", set_name, f"sigma == h^({data['sigma_exp']}c) for c in [1,{p})", cs,
            lambda c: _aggregate(c, [s for s, _, _ in data["signers"]], v)
            == pow(h, data["sigma_exp"] * c % p, q),
        )
    )
    out.append(
        _forall(
            "s1", set_name, f"zeta == h^({data['zeta_exp']}c) for c in [1,{p})", cs,
            lambda c: _aggregate(c, [s for s, _, _ in data["verifiers"]], u)
            == pow(h, data["zeta_exp"] * c % p, q),
        )
    )
    out.append(
        _forall(
            "s1", set_name, "sigma == zeta (transcript simulation) for all c", cs,
            lambda c: _aggregate(c, [s for s, _, _ in data["signers"]], v)
            == _aggregate(c, [s for s, _, _ in data["verifiers"]], u),
        )
    )
    return out


# ------------------------------------------------------------------- s2

_ERRATUM_NOTE = (
    "source round-1 table prints {printed}; with |g_B| = {order} the share is "
    "g_B**{k} = {forced} (mod {p}) — recorded erratum, see the aggregate check "
    "built from the printed rows"
)

_S2_DATA = {
    "paper-ex1": {
        "orders": (15, 14),
        "phis": (8, 6),
        # (e, x, printed d, printed y) per member
        "signers": [(13, 7, 5, 150), (7, 16, 7, 137), (11, 21, 3, 55)],
        "verifiers": [(5, 19, 5, 153), (11, 17, 5, 12)],
        # k -> printed (r, s, w); s cells for k=12 and k=14 are errata
        "round1": {8: (136, 148, 83), 12: (114, 171, 71), 14: (134, 210, 134)},
        "round1_errata": {12: 58, 14: 1},
        "aggregate_printed_rows": (30, 144, 1),
        "aggregate_honest": (30, 58, 1),
        "e_b_product": 55,
        "v_coeffs": [(7, 8), (16, 12), (21, 14)],  # (x, k) -> v_i = x*z + k*r
        "v_bar": (14, 0),  # v_bar == 14*z + 0 (mod 15)
        "d_a_product": 105,
    },
    "paper-ex2": {
        "orders": (91, 187),
        "phis": (72, 160),
        "signers": [
            (5, 15, 29, 58327), (11, 19, 59, 69494), (7, 24, 31, 69058),
            (23, 18, 47, 88515), (35, 32, 35, 26123),
        ],
        "verifiers": [
            (3, 32, 107, 37552), (7, 17, 23, 64089), (11, 22, 131, 63449),
            (19, 27, 59, 93579), (51, 18, 91, 38061), (27, 21, 83, 91435),
            (91, 51, 51, 30671),
        ],
        "round1": {
            42980: (22513, 68227, 59022),
            68841: (77234, 67990, 84473),
            82718: (60319, 8171, 15368),
            90739: (49375, 58517, 68284),
            19344: (40471, 35552, 91619),
        },
        "round1_errata": {},
        "aggregate_printed_rows": (41707, 90653, 91371),
        "aggregate_honest": (41707, 90653, 91371),
        "e_b_product": 549972423,
        "v_coeffs": [(15, 42980), (19, 68841), (24, 82718), (18, 90739), (32, 19344)],
        "v_bar": (17, 31),  # v_bar == 17*z + 31 (mod 91)
        "d_a_product": 87252445,
    },
}


def s2_checks(set_name: str) -> list[VectorCheck]:
    data = _S2_DATA[set_name]
    params = scheme_zn.named_params(set_name)
    p, n_a, n_b = params.p, params.semi_a.n, params.semi_b.n
    out = [
        _check("s2", set_name, "order(g_A)", data["orders"][0],
               element_order(params.g_a, p)),
        _check("s2", set_name, "order(g_B)", data["orders"][1],
               element_order(params.g_b, p)),
        _check("s2", set_name, "phi(n_A)", data["phis"][0], params.semi_a.phi),
        _check("s2", set_name, "phi(n_B)", data["phis"][1], params.semi_b.phi),
    ]
    verifier_pubs = []
    for i, (e, x, d, y) in enumerate(data["signers"], 1):
        key = scheme_zn.member_keygen(params, "A", e=e, x=x)
        out.append(_check("s2", set_name, f"S{i}.d", d, key.d))
        out.append(_check("s2", set_name, f"S{i}.y", y, key.y))
    for j, (e, x, d, y) in enumerate(data["verifiers"], 1):
        key = scheme_zn.member_keygen(params, "B", e=e, x=x)
        verifier_pubs.append(key.y)
        out.append(_check("s2", set_name, f"D{j}.d", d, key.d))
        out.append(_check("s2", set_name, f"D{j}.y", y, key.y))

    honest_shares = []
    for k, (r, s, w) in data["round1"].items():
        share = scheme_zn.sign_round1(params, verifier_pubs, k)
        honest_shares.append(share)
        out.append(_check("s2", set_name, f"round1[k={k}].r", r, share.r))
        out.append(_check("s2", set_name, f"round1[k={k}].w", w, share.w))
        if k in data["round1_errata"]:
            forced = data["round1_errata"][k]
            note = _ERRATUM_NOTE.format(
                printed=s, order=data["orders"][1], k=k, forced=forced, p=p
            )
            out.append(_check("s2", set_name, f"round1[k={k}].s", forced, share.s, note))
        else:
            out.append(_check("s2", set_name, f"round1[k={k}].s", s, share.s))

    message = b""  # the aggregate r/s/w cells do not depend on the message
    e_bs = [e for e, _, _, _ in data["verifiers"]]
    printed_shares = [
        scheme_zn.Round1Share(r=r, s=s, w=w) for (r, s, w) in data["round1"].values()
    ]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", WeakChallengeWarning)
        agg_printed = scheme_zn.aggregate_challenge(params, message, printed_shares, e_bs)
    r0, s0, w0 = data["aggregate_printed_rows"]
    printed_note = (
        "aggregate of the printed round-1 rows (including the erratum cells), "
        "which is how the source arrives at these values"
        if data["round1_errata"]
        else ""
    )
    out.append(_check("s2", set_name, "aggregate(printed rows).r", r0, agg_printed.r))
    out.append(_check("s2", set_name, "aggregate(printed rows).s", s0, agg_printed.s,
                      printed_note))
    out.append(_check("s2", set_name, "aggregate(printed rows).w", w0, agg_printed.w))

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", WeakChallengeWarning)
        agg_honest = scheme_zn.aggregate_challenge(params, message, honest_shares, e_bs)
    r1, s1, w1 = data["aggregate_honest"]
    honest_note = (
        "honest-pipeline value; differs from the printed aggregate only through "
        "the two erratum cells" if data["round1_errata"] else ""
    )
    out.append(_check("s2", set_name, "aggregate(honest).r", r1, agg_honest.r))
    out.append(_check("s2", set_name, "aggregate(honest).s", s1, agg_honest.s, honest_note))
    out.append(_check("s2", set_name, "aggregate(honest).w", w1, agg_honest.w))

    eb = data["e_b_product"]
    out.append(_check("s2", set_name, "prod(e_B)", eb,
                      math.prod(e_bs)))
    out.append(
        _forall("s2", set_name, f"t == z^{eb} == z^{eb % params.semi_b.phi} (mod {n_b})",
                range(n_b),
                lambda z: pow(z, eb, n_b) == pow(z, eb % params.semi_b.phi, n_b))
    )

    r_agg = data["aggregate_honest"][0]
    for i, (x, k) in enumerate(data["v_coeffs"], 1):
        out.append(
            _forall(
                "s2", set_name, f"v_{i} == {x}z + {k}*r for z in [0,{n_b})", range(n_b),
                lambda z, x=x, k=k: scheme_zn.sign_round2(
                    scheme_zn.Challenge(r=r_agg, s=1, w=1, z=z, t=0), _key_x(x), k
                ) == x * z + k * r_agg,
            )
        )
    coeff, const = data["v_bar"]
    xs = [x for _, x, _, _ in data["signers"]]
    ks = list(data["round1"].keys())
    out.append(
        _forall(
            "s2", set_name,
            f"v_bar == {coeff}z + {const} (mod {n_a}) for z in [0,{n_b})", range(n_b),
            lambda z: sum(z * x + k * r_agg for x, k in zip(xs, ks)) % n_a
            == (coeff * z + const) % n_a,
        )
    )
    da = data["d_a_product"]
    d_as = [d for _, _, d, _ in data["signers"]]
    out.append(_check("s2", set_name, "prod(d_A)", da, math.prod(d_as)))
    out.append(
        _forall(
            "s2", set_name, f"u_bar == v_bar^{da} == v_bar (mod {n_a}) for all v_bar",
            range(n_a), lambda v: pow(v, da, n_a) == v,
        )
    )
    if set_name == "paper-ex2":
        out.append(_check("s2", set_name, "549972423 mod phi(187)", 103, 549972423 % 160))
        out.append(
            _forall("s2", set_name, "z^549972423 == z^103 (mod 187) for all z",
                    range(187), lambda z: pow(z, 549972423, 187) == pow(z, 103, 187),
                    note="the source states this for gcd(z,187)=1; square-freeness "
                         "makes it hold for every z")
        )
        out.append(_check("s2", set_name, "87252445 mod phi(91)", 37, 87252445 % 72))
    return out


def _key_x(x: int) -> scheme_zn.ZnMemberKey:
    """A stand-in key carrying only the scalar the round-2 step reads."""
    return scheme_zn.ZnMemberKey(e=1, d=1, x=x, y=1)


# ------------------------------------------------------------------- s3

_S3_DATA = {
    "paper-ex1": {
        "curve_order": 420,
        "orders": (15, 14),
        # (e, x, printed d, printed y-multiple)
        "signers": [(13, 7, 5, 7), (7, 16, 7, 1), (11, 21, 3, 6)],
        "verifiers": [(5, 19, 5, 5), (11, 17, 5, 3)],
        # k -> printed (P-mult, Q-mult of r_i, s_i Q-mult, w_i P-mult)
        "round1": {8: (8, 8, 8, 8), 12: (12, 12, 12, 12), 14: (14, 0, 14, 14)},
        "aggregate": (4, 6, 6, 4),  # r = 4P-6Q, s = 6Q, w = 4P
        "e_b_product": 55,
        "v_coeffs": [(7, 8), (16, 12), (21, 14)],
        "v_bar": (14, 4),
        "d_a_product": 105,
    },
    "paper-ex2": {
        "curve_order": 6916,
        "orders": (91, 38),
        "signers": [
            (5, 15, 29, 15), (11, 19, 59, 19), (7, 24, 31, 24),
            (23, 18, 47, 18), (35, 32, 35, 32),
        ],
        "verifiers": [
            (5, 32, 11, 32), (7, 17, 13, 17), (11, 22, 5, 22), (13, 27, 7, 27),
            (17, 18, 17, 18), (13, 21, 7, 21), (7, 51, 13, 51),
        ],
        "round1": {
            5770: (37, 12, 32, 37), 2769: (39, 10, 33, 39), 6476: (15, 6, 16, 15),
            1751: (22, 32, 3, 22), 88: (88, 14, 12, 88),
        },
        "aggregate": (19, 36, 20, 19),
        "e_b_product": 5 * 7 * 11 * 13 * 17 * 13 * 7,
        "v_coeffs": [(15, 5770), (19, 2769), (24, 6476), (18, 1751), (32, 88)],
        "v_bar": (17, 19),
        "d_a_product": 29 * 59 * 31 * 47 * 35,
    },
}


def s3_checks(set_name: str) -> list[VectorCheck]:
    data = _S3_DATA[set_name]
    params = scheme_ec.named_params(set_name)
    curve, P, Q = params.curve, params.P, params.Q
    n_a, n_b = params.semi_a.n, params.semi_b.n
    out = [
        _check("s3", set_name, "|E|", data["curve_order"], curve_order(curve)),
        _check("s3", set_name, "|P|", data["orders"][0],
               point_order(P, curve, params.group_order)),
        _check("s3", set_name, "|Q|", data["orders"][1],
               point_order(Q, curve, params.group_order)),
    ]
    verifier_pubs = []
    for i, (e, x, d, mult) in enumerate(data["signers"], 1):
        key = scheme_ec.member_keygen(params, "A", e=e, x=x)
        out.append(_check("s3", set_name, f"S{i}.d", d, key.d))
        out.append(_check("s3", set_name, f"S{i}.y", scalar_mul(mult, P, curve).encode(),
                          key.y.encode()))
    for j, (e, x, d, mult) in enumerate(data["verifiers"], 1):
        key = scheme_ec.member_keygen(params, "B", e=e, x=x)
        verifier_pubs.append(key.y)
        out.append(_check("s3", set_name, f"D{j}.d", d, key.d))
        out.append(_check("s3", set_name, f"D{j}.y", scalar_mul(mult, Q, curve).encode(),
                          key.y.encode()))

    shares = []
    for k, (rp, rq, sq, wp) in data["round1"].items():
        share = scheme_ec.sign_round1(params, verifier_pubs, k)
        shares.append(share)
        expected_r = point_sub(scalar_mul(rp, P, curve), scalar_mul(rq, Q, curve), curve)
        out.append(_check("s3", set_name, f"round1[k={k}].r", expected_r.encode(),
                          share.r.encode()))
        out.append(_check("s3", set_name, f"round1[k={k}].s",
                          scalar_mul(sq, Q, curve).encode(), share.s.encode()))
        out.append(_check("s3", set_name, f"round1[k={k}].w",
                          scalar_mul(wp, P, curve).encode(), share.w.encode()))

    e_bs = [e for e, _, _, _ in data["verifiers"]]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", WeakChallengeWarning)
        agg = scheme_ec.aggregate_challenge(params, b"", shares, e_bs)
    ar, aq, asq, awp = data["aggregate"]
    expected_r = point_sub(scalar_mul(ar, P, curve), scalar_mul(aq, Q, curve), curve)
    out.append(_check("s3", set_name, "aggregate.r", expected_r.encode(), agg.r.encode()))
    out.append(_check("s3", set_name, "aggregate.s",
                      scalar_mul(asq, Q, curve).encode(), agg.s.encode()))
    out.append(_check("s3", set_name, "aggregate.w",
                      scalar_mul(awp, P, curve).encode(), agg.w.encode()))

    eb = data["e_b_product"]
    out.append(_check("s3", set_name, "prod(e_B)", eb, math.prod(e_bs)))
    out.append(
        _forall("s3", set_name, f"t == z^{eb} == z^{eb % params.semi_b.phi} (mod {n_b})",
                range(n_b),
                lambda z: pow(z, eb, n_b) == pow(z, eb % params.semi_b.phi, n_b))
    )
    for i, (x, k) in enumerate(data["v_coeffs"], 1):
        out.append(
            _forall(
                "s3", set_name, f"v_{i} == {x}z + {k} for z in [0,{n_b})", range(n_b),
                lambda z, x=x, k=k: scheme_ec.sign_round2(
                    scheme_ec.EcChallenge(r=INFINITY, s=INFINITY, w=INFINITY, z=z, t=0),
                    _ec_key_x(x), k
                ) == x * z + k,
            )
        )
    coeff, const = data["v_bar"]
    xs = [x for _, x, _, _ in data["signers"]]
    ks = list(data["round1"].keys())
    out.append(
        _forall(
            "s3", set_name,
            f"v_bar == {coeff}z + {const} (mod {n_a}) for z in [0,{n_b})", range(n_b),
            lambda z: sum(z * x + k for x, k in zip(xs, ks)) % n_a
            == (coeff * z + const) % n_a,
        )
    )
    da = data["d_a_product"]
    out.append(
        _forall(
            "s3", set_name, f"u_bar == v_bar^{da} == v_bar (mod {n_a}) for all v_bar",
            range(n_a), lambda v: pow(v, da, n_a) == v,
        )
    )
    return out


def _ec_key_x(x: int) -> scheme_ec.EcMemberKey:
    return scheme_ec.EcMemberKey(e=1, d=1, x=x, y=Point())


_CHECKERS = {"s1": s1_checks, "s2": s2_checks, "s3": s3_checks}


def all_checks(scheme: str | None = None, set_name: str | None = None) -> list[VectorCheck]:
    """Every vector check, optionally filtered by scheme and set name."""
    out: list[VectorCheck] = []
    for sch, sets in SCHEME_SETS.items():
        if scheme and sch != scheme:
            continue
        for name in sets:
            if set_name and name != set_name:
                continue
            out.extend(_CHECKERS[sch](name))
    return out
