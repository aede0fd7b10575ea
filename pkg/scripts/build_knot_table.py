"""Generate the bundled knot table from standard presentations.

Every entry is built from a documented presentation: a 2-bridge fraction
(continued-fraction tangle closure), a braid word closure, or a Montesinos
sum of rational tangles.  Each generated diagram is verified before it is
written: crossing count, single component, determinant, cochain-complex
integrity, alternation where the presentation is alternating, and homology
mirror-symmetry for amphichiral knots.  2-bridge fractions identify the
knot rigorously; braid and Montesinos entries are pinned by determinant
plus crossing count within their presentation class.

Usage: python3 scripts/build_knot_table.py [output-path]
"""

from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

import khovlap as kl

# A crossing has four ports in counterclockwise cyclic order; opposite ports
# carry the same strand.
PORTS = ("NW", "SW", "SE", "NE")
MATE = {"NW": "SE", "SE": "NW", "NE": "SW", "SW": "NE"}


class Builder:
    """Half-edge scaffold: crossings with compass ports, arcs joining ports."""

    def __init__(self):
        self.over = []  # per crossing: "NW-SE" or "NE-SW"
        self.arcs = {}  # endpoint -> endpoint, symmetric

    def crossing(self, over_diag: str) -> int:
        assert over_diag in ("NW-SE", "NE-SW")
        self.over.append(over_diag)
        return len(self.over) - 1

    def join(self, a, b):
        assert a not in self.arcs and b not in self.arcs, (a, b)
        self.arcs[a] = b
        self.arcs[b] = a

    def to_pd(self) -> str:
        n = len(self.over)
        endpoints = {(c, p) for c in range(n) for p in PORTS}
        assert set(self.arcs) == endpoints, "dangling ports remain"

        label_at = {}  # endpoint -> edge label
        incoming = {}  # endpoint -> strand enters the crossing here
        seen = set()
        next_label = 1
        for start in sorted(endpoints):
            if start in seen:
                continue
            # walk one component, labelling arcs in traversal order
            ep = start
            while True:
                far = self.arcs[ep]
                label_at[ep] = label_at[far] = next_label
                incoming[ep] = False
                incoming[far] = True
                seen.add(ep)
                seen.add(far)
                next_label += 1
                ep = (far[0], MATE[far[1]])
                if ep == start:
                    break

        codes = []
        for c in range(n):
            over_ports = set(self.over[c].split("-"))
            under_in = [
                p for p in PORTS if p not in over_ports and incoming[(c, p)]
            ]
            assert len(under_in) == 1, f"crossing {c} orientation is inconsistent"
            k = PORTS.index(under_in[0])
            cyc = [PORTS[(k + t) % 4] for t in range(4)]
            codes.append("X[%d,%d,%d,%d]" % tuple(label_at[(c, p)] for p in cyc))
        return " ".join(codes)

    def component_count(self) -> int:
        seen = set()
        count = 0
        for start in sorted(self.arcs):
            if start in seen:
                continue
            count += 1
            ep = start
            while True:
                far = self.arcs[ep]
                seen.add(ep)
                seen.add(far)
                ep = (far[0], MATE[far[1]])
                if ep == start:
                    break
        return count


def braid_closure(word: list[int], strands: int) -> Builder:
    """Closure of a braid word; positive k means generator sigma_k."""
    b = Builder()
    dangling: list = [None] * (strands + 1)
    tops: list = [None] * (strands + 1)

    def feed(pos, ep):
        if dangling[pos] is None:
            tops[pos] = ep
        else:
            b.join(dangling[pos], ep)

    for letter in word:
        i = abs(letter)
        assert 1 <= i < strands
        c = b.crossing("NW-SE" if letter > 0 else "NE-SW")
        feed(i, (c, "NW"))
        feed(i + 1, (c, "NE"))
        dangling[i] = (c, "SW")
        dangling[i + 1] = (c, "SE")
    for pos in range(1, strands + 1):
        assert dangling[pos] is not None, f"strand {pos} unused"
        b.join(dangling[pos], tops[pos])
    return b


class Frag:
    """Tangle fragment: four corner terminals, possibly bare arcs."""

    def __init__(self, b: Builder):
        self.b = b
        # corner -> ("port", endpoint) or ("link", other corner)
        self.corners = {
            "NW": ("link", "NE"),
            "NE": ("link", "NW"),
            "SW": ("link", "SE"),
            "SE": ("link", "SW"),
        }

    def _attach(self, corner: str, ep):
        kind, val = self.corners[corner]
        if kind == "port":
            self.b.join(val, ep)
        else:
            self.corners[val] = ("port", ep)

    def twist_right(self, hand: str):
        """One crossing between the NE and SE strands."""
        c = self.b.crossing(hand)
        self._attach("NE", (c, "NW"))
        self._attach("SE", (c, "SW"))
        self.corners["NE"] = ("port", (c, "NE"))
        self.corners["SE"] = ("port", (c, "SE"))

    def twist_bottom(self, hand: str):
        """One crossing between the SW and SE strands."""
        c = self.b.crossing(hand)
        self._attach("SW", (c, "NW"))
        self._attach("SE", (c, "NE"))
        self.corners["SW"] = ("port", (c, "SW"))
        self.corners["SE"] = ("port", (c, "SE"))

    def rotate(self):
        """Quarter turn: corners advance one step counterclockwise."""
        old = self.corners
        perm = {"NW": "NE", "NE": "SE", "SE": "SW", "SW": "NW"}
        inv = {v: k for k, v in perm.items()}
        self.corners = {
            new: (old[inv[new]][0], perm[old[inv[new]][1]])
            if old[inv[new]][0] == "link"
            else old[inv[new]]
            for new in PORTS
        }

    def close(self, a: str, c: str):
        ka, va = self.corners[a]
        if ka == "link":
            assert va == c, "closing a bare arc onto itself"
            return  # free circle would appear; callers forbid this
        kc, vc = self.corners[c]
        if kc == "link":
            self.corners[vc] = ("port", va)
        else:
            self.b.join(va, vc)


def odd_continued_fraction(p: int, q: int) -> list[int]:
    """All-positive continued fraction of p/q > 1 with an odd number of terms."""
    assert p > q >= 1
    terms = []
    a, b = p, q
    while b:
        terms.append(a // b)
        a, b = b, a % b
    assert Fraction(p, q) == _cf_value(terms)
    if len(terms) % 2 == 0:
        if terms[-1] > 1:
            terms = terms[:-1] + [terms[-1] - 1, 1]
        else:
            terms = terms[:-2] + [terms[-2] + 1]
    assert len(terms) % 2 == 1 and all(t >= 1 for t in terms)
    assert Fraction(p, q) == _cf_value(terms)
    return terms


def _cf_value(terms: list[int]) -> Fraction:
    val = Fraction(terms[-1])
    for t in reversed(terms[:-1]):
        val = t + 1 / val
    return val


# Twist handedness pairs making the alternating construction consistent;
# calibrated below against known two-bridge determinants.
HANDEDNESS = {"right": "NW-SE", "bottom": "NE-SW"}


def rational_tangle(b: Builder, p: int, q: int, mirrored: bool = False) -> Frag:
    """Tangle of fraction p/q > 1 built from its continued fraction.

    Twist blocks are applied innermost-first, alternating right and bottom
    twists and ending with right twists, so the closure of the result is
    the alternating two-bridge diagram b(p, q).
    """
    terms = odd_continued_fraction(p, q)
    frag = Frag(b)
    flip = {"NW-SE": "NE-SW", "NE-SW": "NW-SE"}
    for depth, count in enumerate(reversed(terms)):
        kind = "right" if depth % 2 == 0 else "bottom"
        hand = HANDEDNESS[kind]
        if mirrored:
            hand = flip[hand]
        for _ in range(count):
            if kind == "right":
                frag.twist_right(hand)
            else:
                frag.twist_bottom(hand)
    return frag


def two_bridge(p: int, q: int) -> Builder:
    b = Builder()
    frag = rational_tangle(b, p, q)
    frag.close("NW", "NE")
    frag.close("SW", "SE")
    return b


def montesinos(fractions: list[Fraction]) -> Builder:
    """Numerator closure of a horizontal sum of vertical rational tangles.

    Each fraction beta/alpha with |beta| < alpha becomes the quarter-turn
    of the tangle alpha/|beta|, mirrored when beta < 0.  The overall result
    is determined up to global mirror image.
    """
    b = Builder()
    frags = []
    for f in fractions:
        assert 0 < abs(f) < 1
        frag = rational_tangle(b, f.denominator, abs(f.numerator), mirrored=f < 0)
        frag.rotate()
        frags.append(frag)
    merged = frags[0]
    for nxt in frags[1:]:
        # horizontal concatenation: east side of one to west side of the next
        for a, c in (("NE", "NW"), ("SE", "SW")):
            ka, va = merged.corners[a]
            kc, vc = nxt.corners[c]
            assert ka == "port" and kc == "port"
            b.join(va, vc)
        merged.corners["NE"] = nxt.corners["NE"]
        merged.corners["SE"] = nxt.corners["SE"]
    merged.close("NW", "NE")
    merged.close("SW", "SE")
    return b


def is_alternating(d: kl.LinkDiagram) -> bool:
    roles: dict[int, list[bool]] = {}
    for idx, cr in enumerate(d.crossings):
        over_in = d.over_in[idx]
        over_out = 3 if over_in == 1 else 1
        for slot, edge in enumerate(cr):
            roles.setdefault(edge, []).append(slot in (over_in, over_out))
    return all(len(r) == 2 and r[0] != r[1] for r in roles.values())


def build_and_check(name, builder, crossings, det, achiral, alternating):
    assert builder.component_count() == 1, f"{name}: not a knot"
    pd_text = builder.to_pd()
    d = kl.parse_pd(pd_text)
    assert d.n == crossings, f"{name}: {d.n} crossings, expected {crossings}"
    kl.verify_complex(d)
    got_det = kl.knot_determinant(d)
    assert got_det == det, f"{name}: determinant {got_det}, expected {det}"
    if alternating:
        assert is_alternating(d), f"{name}: diagram is not alternating"
    if achiral:
        bt = kl.betti_table(d)
        refl = {(-r, -q): v for (r, q), v in bt.items()}
        assert bt == refl, f"{name}: homology not mirror-symmetric"
    return pd_text


# name -> (p, q): the knot is the 2-bridge knot b(p, q); det = p.
TWO_BRIDGE = {
    "3_1": (3, 1), "4_1": (5, 2), "5_1": (5, 1), "5_2": (7, 2),
    "6_1": (9, 2), "6_2": (11, 3), "6_3": (13, 5),
    "7_1": (7, 1), "7_2": (11, 2), "7_3": (13, 3), "7_4": (15, 4),
    "7_5": (17, 5), "7_6": (19, 8), "7_7": (21, 8),
    "8_1": (13, 2), "8_2": (17, 3), "8_3": (17, 4), "8_4": (19, 4),
    "8_6": (23, 7), "8_7": (23, 5), "8_8": (25, 11), "8_9": (25, 7),
    "8_11": (27, 8), "8_12": (29, 12), "8_13": (29, 8), "8_14": (31, 13),
    "10_17": (41, 9), "10_33": (65, 18), "10_37": (53, 23),
    "10_43": (73, 27), "10_45": (89, 34),
}

# name -> (fractions, det, alternating)
MONTESINOS = {
    "8_5": ([Fraction(1, 3), Fraction(1, 3), Fraction(1, 2)], 21, True),
    "8_10": ([Fraction(1, 3), Fraction(2, 3), Fraction(1, 2)], 27, True),
    "8_15": ([Fraction(2, 3), Fraction(2, 3), Fraction(1, 2)], 33, True),
    "8_19": ([Fraction(1, 3), Fraction(1, 3), Fraction(-1, 2)], 3, False),
    "8_20": ([Fraction(1, 3), Fraction(2, 3), Fraction(-1, 2)], 9, False),
    "8_21": ([Fraction(2, 3), Fraction(2, 3), Fraction(-1, 2)], 15, False),
    "10_48": ([Fraction(4, 5), Fraction(1, 3), Fraction(1, 2)], 49, True),
}

# Amphichiral knots in the table; their homology must be mirror-symmetric.
ACHIRAL = {
    "4_1", "6_3", "8_3", "8_9", "8_12", "8_17", "8_18",
    "10_17", "10_33", "10_37", "10_43", "10_45", "10_123",
}


def alternating_3braids(total: int):
    """Alternating-sign 3-braid words with `total` letters: sigma_1 blocks
    positive, sigma_2 blocks negative, both generators present."""
    def compositions(n, parts):
        if parts == 1:
            yield (n,)
            return
        for first in range(1, n - parts + 2):
            for rest in compositions(n - first, parts - 1):
                yield (first,) + rest

    for blocks in range(2, total + 1):
        for comp in compositions(total, blocks):
            word = []
            for idx, count in enumerate(comp):
                gen = 1 if idx % 2 == 0 else -2
                word.extend([gen] * count)
            yield word


def find_braid_knot(total: int, det: int, name: str) -> Builder:
    """Alternating 3-braid closure with the given determinant."""
    for word in alternating_3braids(total):
        b = braid_closure(word, 3)
        if b.component_count() != 1:
            continue
        d = kl.parse_pd(b.to_pd())
        if kl.knot_determinant(d) == det:
            print(f"  {name}: braid word {word}")
            return b
    raise RuntimeError(f"no alternating 3-braid closure with det {det}")


def calibrate():
    """Fix twist handedness so the two-bridge construction is alternating."""
    global HANDEDNESS
    for right in ("NW-SE", "NE-SW"):
        for bottom in ("NW-SE", "NE-SW"):
            HANDEDNESS = {"right": right, "bottom": bottom}
            try:
                for p, q in ((3, 1), (5, 2), (7, 3), (13, 5)):
                    b = two_bridge(p, q)
                    if b.component_count() != 1:
                        raise ValueError
                    d = kl.parse_pd(b.to_pd())
                    if kl.knot_determinant(d) != p or not is_alternating(d):
                        raise ValueError
                print(f"calibrated handedness: right={right} bottom={bottom}")
                return
            except (ValueError, AssertionError):
                continue
    raise RuntimeError("no consistent twist handedness found")


DETS = {
    "3_1": 3, "4_1": 5, "5_1": 5, "5_2": 7, "6_1": 9, "6_2": 11, "6_3": 13,
    "7_1": 7, "7_2": 11, "7_3": 13, "7_4": 15, "7_5": 17, "7_6": 19, "7_7": 21,
    "8_1": 13, "8_2": 17, "8_3": 17, "8_4": 19, "8_5": 21, "8_6": 23,
    "8_7": 23, "8_8": 25, "8_9": 25, "8_10": 27, "8_11": 27, "8_12": 29,
    "8_13": 29, "8_14": 31, "8_15": 33, "8_16": 35, "8_17": 37, "8_18": 45,
    "8_19": 3, "8_20": 9, "8_21": 15,
    "10_17": 41, "10_33": 65, "10_37": 53, "10_43": 73, "10_45": 89,
    "10_48": 49, "10_123": 121,
}


def main():
    out_path = Path(sys.argv[1]) if len(sys.argv) > 1 else (
        Path(__file__).resolve().parent.parent
        / "src" / "khovlap" / "data" / "knot_table.txt"
    )
    calibrate()
    table: dict[str, str] = {}

    for name, (p, q) in sorted(TWO_BRIDGE.items()):
        crossings = int(name.split("_")[0])
        table[name] = build_and_check(
            name, two_bridge(p, q), crossings, p,
            achiral=name in ACHIRAL, alternating=True,
        )
        print(f"  {name}: two-bridge {p}/{q} ok")

    for name, (fracs, det, alt) in sorted(MONTESINOS.items()):
        crossings = int(name.split("_")[0])
        table[name] = build_and_check(
            name, montesinos(fracs), crossings, det,
            achiral=name in ACHIRAL, alternating=alt,
        )
        print(f"  {name}: montesinos {[str(f) for f in fracs]} ok")

    for name, det in (("8_16", 35), ("8_17", 37), ("8_18", 45)):
        b = find_braid_knot(8, det, name)
        table[name] = build_and_check(
            name, b, 8, det, achiral=name in ACHIRAL, alternating=True
        )

    b = braid_closure([1, -2] * 5, 3)
    table["10_123"] = build_and_check(
        "10_123", b, 10, 121, achiral=True, alternating=True
    )

    def sort_key(name):
        c, idx = name.split("_")
        return int(c), int(idx)

    lines = [
        "# Prime knot diagrams in PD notation, one 'name: code' per line.",
        "# Generated by scripts/build_knot_table.py from standard presentations:",
        "# two-bridge continued-fraction closures, Montesinos tangle sums, and",
        "# braid closures.  Each diagram is verified by determinant, crossing",
        "# count, and (for amphichiral knots) homology mirror-symmetry.",
        "# Diagrams are standard presentations, not necessarily minimal-genus",
        "# or matching any particular published diagram crossing-for-crossing.",
    ]
    for name in sorted(table, key=sort_key):
        lines.append(f"{name}: {table[name]}")
    out_path.write_text("\n".join(lines) + "\n")
    print(f"wrote {len(table)} knots to {out_path}")


if __name__ == "__main__":
    main()
