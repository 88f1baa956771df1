#!/usr/bin/env python3
"""Generate src/thetacert/data/catalog.tsv.

Closed forms are written here as prefix s-expressions with a few Python-level
macros (shared radicals and the s(p) expander).  Theorem instances for the two
overview tables are produced by splicing class-invariant closed forms from
the invariants table into the general quotient formulas.

Every generated line is parsed back before it is written, so a typo in this
file fails the build instead of shipping.
"""

from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from thetacert.closed import parse_closed, print_closed  # noqa: E402
from thetacert.invariants import G_table  # noqa: E402

OUT = ROOT / "src" / "thetacert" / "data" / "catalog.tsv"


def G(n) -> str:
    return print_closed(G_table(Fraction(n)).closed_form)


def S(p: str) -> str:
    """s(p) as a closed form in p."""
    r = f"(mul (sub 4 {p}) (sqrt (add 4 (pow {p} 2))))"
    base = f"(add (pow (sub {p} 1) 2) 7)"
    return (f"(mul 1/5 (add 1 (nthroot 5 (mul (div {p} 2) (add {base} {r})))"
            f" (nthroot 5 (mul (div {p} 2) (sub {base} {r})))))")


def Q(k) -> str:
    return f"(proc phi-quot {k})"


# shared radicals ------------------------------------------------------------

SQ2 = "(sqrt 2)"
INV_SQ3 = "(div 1 (sqrt 3))"
R3 = "(nthroot 4 (sub (mul 6 (sqrt 3)) 9))"          # (6 sqrt3 - 9)^(1/4)
R5 = "(sqrt (sub (mul 5 (sqrt 5)) 10))"              # (5 sqrt5 - 10)^(1/2)
E7 = ("(mul (div (add (sqrt (add 13 (sqrt 7))) (sqrt (add 7 (mul 3 (sqrt 7))))) 14)"
      " (nthroot 8 28))")                            # phi^2(e^-7pi)/phi^2(e^-pi)
S7P = "(add (sqrt (div (add 5 (sqrt 21)) 8)) (sqrt (div (sub (sqrt 21) 3) 8)))"
S7M = "(sub (sqrt (div (add 5 (sqrt 21)) 8)) (sqrt (div (sub (sqrt 21) 3) 8)))"
H73 = "(div (add (sqrt 7) (sqrt 3)) 2)"
R81 = ("(div (add (nthroot 3 (mul 2 (add (sqrt 3) 1))) 1)"
       " (sub (nthroot 3 (mul 2 (sub (sqrt 3) 1))) 1))")
C9 = "(nthroot 3 (mul 2 (add (sqrt 3) 1)))"          # (2(sqrt3+1))^(1/3)
A117 = "(div (add (nthroot 4 3) (sqrt (add 4 (sqrt 3)))) 2)"
B117 = "(sqrt (add (sqrt (add 208 (mul 120 (sqrt 3)))) (sqrt (add 207 (mul 120 (sqrt 3))))))"
M17 = "(sub (sqrt (div (add 5 (sqrt 17)) 8)) (sqrt (div (sub (sqrt 17) 3) 8)))"
N17 = ("(add (sqrt (div (add 37 (mul 9 (sqrt 17))) 4))"
       " (sqrt (div (add 33 (mul 9 (sqrt 17))) 4)))")
A225 = "(div (add (sqrt (add 4 (sqrt 15))) (nthroot 4 15)) 2)"
B225P = "(add (sqrt (add 4276 (mul 1104 (sqrt 15)))) (sqrt (add 4275 (mul 1104 (sqrt 15)))))"
B225M = "(sub (sqrt (add 4276 (mul 1104 (sqrt 15)))) (sqrt (add 4275 (mul 1104 (sqrt 15)))))"
A333 = "(div (add (sqrt (add 7 (mul 2 (sqrt 3)))) (sqrt (add 3 (mul 2 (sqrt 3))))) 2)"
B333 = ("(sqrt (add (sqrt (add 42193 (mul 24360 (sqrt 3))))"
        " (sqrt (add 42192 (mul 24360 (sqrt 3))))))")
W7 = ("(div (add (sqrt (add 3 (sqrt 7))) (nthroot 4 (mul 6 (sqrt 7))))"
      " (sub (sqrt (add 3 (sqrt 7))) (nthroot 4 (mul 6 (sqrt 7)))))")
W7INV = ("(div (sub (sqrt (add 3 (sqrt 7))) (nthroot 4 (mul 6 (sqrt 7))))"
         " (add (sqrt (add 3 (sqrt 7))) (nthroot 4 (mul 6 (sqrt 7)))))")
D932 = "(sub (sqrt (add 932 (mul 352 (sqrt 7)))) (sqrt (add 931 (mul 352 (sqrt 7)))))"
G49M = "(div (sub (add 2 (sqrt 7)) (sqrt (add 7 (mul 4 (sqrt 7))))) 2)"
G49P = "(sqrt (div (add (add 2 (sqrt 7)) (sqrt (add 7 (mul 4 (sqrt 7))))) 2))"
A85 = "(div (sub (sqrt 85) 9) 2)"
X51A = "(add (sqrt (div (add 6 (sqrt 51)) 4)) (sqrt (div (add 10 (sqrt 51)) 4)))"
X51B = ("(add (sqrt (div (add 18 (mul 3 (sqrt 51))) 4))"
        " (sqrt (div (add 22 (mul 3 (sqrt 51))) 4)))")
Z11 = ("(add (mul 1/6 (add 1 (sqrt 33)) (nthroot 3 (mul 6 (sub 9 (sqrt 33)))))"
       " (mul 2/3 (nthroot 3 (mul 6 (add 9 (sqrt 33))))))")
C2 = "(nthroot 3 2)"

# quintic p values
P3 = ("(div 6 (sub (add (mul (div (add (sqrt 5) 1) 2) (nthroot 3 10))"
      " (mul (div (sub (sqrt 5) 1) 2) (nthroot 3 4) (nthroot 6 5))) (add (sqrt 5) 1)))")
P7 = ("(div 3 (add (div (sub (sqrt 5) 1) 2) (mul (nthroot 3 (div (sub 5 (sqrt 5)) 4))"
      " (sub (nthroot 3 (sub (add (mul 3 (sqrt 21)) 8) (mul 3 (sqrt 5))))"
      " (nthroot 3 (add (sub (mul 3 (sqrt 21)) 8) (mul 3 (sqrt 5))))))))")
P7ALT = ("(mul 1/3 (add 2 (sqrt 5) (mul (nthroot 3 (div (add 5 (mul 2 (sqrt 5))) 2))"
         " (add (nthroot 3 (add 17 (mul 3 (sqrt 21)))) (nthroot 3 (sub 17 (mul 3 (sqrt 21))))))))")
P9 = f"(mul 2 (sqrt (sub 2 (sqrt 3))) (div (add 1 (sqrt 5)) 2) {A225})"
T13 = ("(rootof (coeffs (add 1 (sqrt 5)) (sub (pow (div (add 1 (sqrt 13)) 2) 2)"
       " (mul (sqrt 5) (div (sub 1 (sqrt 13)) 2))) (add (pow (div (sub 1 (sqrt 13)) 2) 2)"
       " (mul (sqrt 5) (div (add 1 (sqrt 13)) 2))) (sub 1 (sqrt 5))) 6 7)")
P13 = f"(mul (sub (sqrt 13) 3) {T13})"
F35 = "(mul (add 8 (mul 3 (sqrt 7))) (sqrt (mul 10 (sqrt 7))))"
P35 = (f"(mul 2 (div (add 1 (sqrt 5)) 2) (nthroot 4 (add 6 (sqrt 35)))"
       f" (pow (div (sub (sqrt (add 4 (sqrt 7))) (nthroot 4 7)) 2) 7/2)"
       f" (add (sqrt (div (add 43 (mul 15 (sqrt 7)) {F35}) 8))"
       f" (sqrt (div (add 35 (mul 15 (sqrt 7)) {F35}) 8))))")
Q5 = ("(add 1 (nthroot 5 (div (mul 2 (add 1 (tan 1/5))) (sub 1 (sin 1/5))))"
      " (nthroot 5 (div (mul 2 (sub 1 (tan 1/5))) (add 1 (sin 1/5)))))")
Q25 = ("(add 1 (nthroot 5 (mul 8 (add (mul 3 (cos 1/5)) (sin 1/5))))"
       " (nthroot 5 (mul 8 (sub (mul 3 (cos 1/5)) (sin 1/5)))))")
P125 = f"(sub (mul (div 1 (sqrt 5)) (pow {Q5} 2)) 1)"
P625 = f"(sub (mul (div (pow (tan 1/5) 2) (sqrt 5)) (pow {Q25} 2)) 1)"
R2555 = "(sqrt (sub 25 (mul 10 (sqrt 5))))"
R552 = "(sqrt (sub 5 (mul 2 (sqrt 5))))"

ENTRIES: list[tuple[str, str, str, str, str]] = []


def add(ident, family, lhs, rhs, desc):
    ENTRIES.append((ident, lhs, rhs, family, desc))


# -- gamma evaluations ------------------------------------------------------

def gammas(den, nums):
    return "(mul " + " ".join(f"(gamma {k}/{den})" for k in nums) + ")"


add("eq:e3", "gamma", "(proc phi 3)",
    "(div (mul (nthroot 8 3) (pow (gamma 1/3) 3/2)) (mul (pow 2 2/3) (pi)))",
    "phi(e^{-pi sqrt3}) via Gamma(1/3)")
add("eq:e5", "gamma", "(proc phi 5)",
    f"(mul (nthroot 8 (add (sqrt 5) 2)) (nthroot 4 (div {gammas(20, [1, 3, 7, 9])}"
    " (mul 40 (pow (pi) 3)))))",
    "phi(e^{-pi sqrt5}) via Gamma(k/20)")
add("eq:e7", "gamma", "(proc phi 7)",
    f"(div (sqrt {gammas(7, [1, 2, 4])}) (mul (sqrt 2) (nthroot 8 7) (pi)))",
    "phi(e^{-pi sqrt7}) via Gamma(k/7)")
add("eq:e11", "gamma", "(proc phi 11)",
    "(mul (sub (add 2 (nthroot 3 (add (mul 3 (sqrt 33)) 17))) (nthroot 3 (sub (mul 3 (sqrt 33)) 17)))"
    f" (sqrt (div {gammas(11, [1, 3, 4, 5, 9])} (mul 72 (nthroot 4 11) (pow (pi) 3)))))",
    "phi(e^{-pi sqrt11}) via Gamma(k/11)")
add("eq:e13", "gamma", "(proc phi 13)",
    "(mul (nthroot 8 (add 18 (mul 5 (sqrt 13))))"
    f" (nthroot 4 (div {gammas(52, [1, 7, 9, 11, 15, 17, 19, 25, 29, 31, 47, 49])}"
    " (mul 1664 (pow (pi) 7)))))",
    "phi(e^{-pi sqrt13}) via Gamma(k/52)")
add("eq:e17", "gamma", "(proc phi 17)",
    "(mul (pow 2 -7/4) (pow 17 -1/4) (pow (pi) -1/4) (nthroot 16 (sub (sqrt 17) 4))"
    " (pow (add 1 (sqrt 17) (sqrt (add 2 (mul 2 (sqrt 17))))) 3/4) (nthroot 16 (gkp 68 -68)))",
    "phi(e^{-pi sqrt17}) via the Kronecker-weighted Gamma product mod 68")
add("thm:e37", "gamma", "(proc phi 37)",
    "(mul (pow 2 -1/4) (pow 37 -1/4) (pow (pi) -1/4) (pow (add 6 (sqrt 37)) 3/8)"
    " (nthroot 8 (gkp 148 -148)))",
    "phi(e^{-pi sqrt37}) via the Kronecker-weighted Gamma product mod 148")

# -- eta sub-identities -----------------------------------------------------

add("eq:SelbergChowla", "eta", "(proc eta4-product 37)",
    "(mul (pow 2 -5) (pow 37 -2) (pow (pi) -2) (gkp 148 -148))",
    "|eta^4((sqrt(-37)+1)/2) eta^4(sqrt(-37))| as a Gamma product")
add("eq:e37", "eta", "(proc phi16-eta8 37)", "(mul 64 (pow (add 6 (sqrt 37)) 6))",
    "phi^16(e^{-pi sqrt37}) / |eta^4 eta^4|^2 = 2^6 G_37^24")
for m in (37, 5, 13):
    add(f"eq:eta-G:{m}", "eta", f"(proc eta-quot {m})", f"(mul (nthroot 4 2) {G(m)})",
        f"|eta((tau+1)/2)/eta(tau)| = 2^(1/4) G_{m} at tau = sqrt(-{m})")

# -- septic -------------------------------------------------------------------

add("thm:enigmatic", "septic", Q("343 7"),
    "(mul (pow 7 -3/4) (add 1"
    " (pow (div (cos 1/7) (mul 2 (pow (cos 2/7) 2))) 2/7)"
    " (pow (div (cos 2/7) (mul 2 (pow (cos 3/7) 2))) 2/7)"
    " (pow (div (cos 3/7) (mul 2 (pow (cos 1/7) 2))) 2/7)))",
    "phi(e^{-7 pi sqrt7}) / phi(e^{-pi sqrt7}), the completed septic entry")

# -- cubic corollaries --------------------------------------------------------

add("eq:transform:3", "cubic", Q("3 1/3"), "(pow 3 -1/4)",
    "phi(e^{-pi sqrt3}) / phi(e^{-pi/sqrt3}) by the transformation formula")
add("cor:3sqrt3", "cubic", Q("27 3"), f"(mul (pow 3 -3/4) (add 1 {C2}))",
    "phi(e^{-3 pi sqrt3}) / phi(e^{-pi sqrt3})")
add("cor:3sqrt3:trig", "cubic", Q("27 3"),
    "(mul (pow 3 -3/4) (add 1 (nthroot 3 (div 1 (cos 1/3)))))",
    "trigonometric form of the 3 sqrt3 quotient")
add("cor:3sqrt3:3n", "cubic", Q("27 3"),
    f"(mul {INV_SQ3} (nthroot 4 (div (add {C2} 1) (sub {C2} 1))))",
    "3 sqrt3 quotient from the 3n theorem at n = 3")
add("cor:3", "cubic", Q("9 1"), f"(div 1 {R3})", "phi(e^{-3 pi}) / phi(e^{-pi})")
add("cor:9", "cubic", Q("81 1"), f"(div (add 1 {C9}) 3)", "phi(e^{-9 pi}) / phi(e^{-pi})")
add("cor:9sqrt3", "cubic", Q("243 3"),
    f"(mul 1/3 (add 1 (nthroot 3 (div 2 (sub {C2} 1)))))",
    "phi(e^{-9 pi sqrt3}) / phi(e^{-pi sqrt3})")
add("cor:3sqrt5", "cubic", Q("45 5"),
    "(div (nthroot 4 (add 1 (mul 2 (add (sqrt 3) (sqrt 5))))) (sqrt 3))",
    "phi(e^{-3 pi sqrt5}) / phi(e^{-pi sqrt5})")
add("cor:9sqrt5", "cubic", Q("405 5"),
    "(div (add 1 (nthroot 3 (mul 2 (add (sqrt 3) (sqrt 5))))) 3)",
    "phi(e^{-9 pi sqrt5}) / phi(e^{-pi sqrt5})")
add("cor:3sqrt7", "cubic", Q("63 7"),
    f"(mul {INV_SQ3} (nthroot 4 (add 1 (mul {H73} (pow {S7P} 3)))))",
    "phi(e^{-3 pi sqrt7}) / phi(e^{-pi sqrt7})")
add("cor:9sqrt7", "cubic", Q("567 7"),
    f"(mul 1/3 (add 1 (mul (nthroot 3 {H73}) {S7P})))",
    "phi(e^{-9 pi sqrt7}) / phi(e^{-pi sqrt7})")
add("cor:27", "cubic", Q("729 1"),
    f"(mul (div 1 (mul 3 {R3})) (add 1 (mul (sub (sqrt 3) 1) (nthroot 3 {R81}))))",
    "phi(e^{-27 pi}) / phi(e^{-pi})")
add("cor:3sqrt13", "cubic", Q("117 13"),
    f"(mul {INV_SQ3} (nthroot 4 (add 1 (mul 2 {SQ2} (pow (div (sub (sqrt 13) 3) 2) 3/2)"
    f" (sqrt (add (mul 2 (sqrt 3)) (sqrt 13))) {B117}))))",
    "phi(e^{-3 pi sqrt13}) / phi(e^{-pi sqrt13})")
add("cor:9sqrt13", "cubic", Q("1053 13"),
    f"(mul 1/3 (add 1 (mul {SQ2} (sqrt (div (sub (sqrt 13) 3) 2))"
    f" (nthroot 6 (add (mul 2 (sqrt 3)) (sqrt 13))) {A117})))",
    "phi(e^{-9 pi sqrt13}) / phi(e^{-pi sqrt13})")
add("cor:3sqrt17", "cubic", Q("153 17"),
    f"(mul {INV_SQ3} (nthroot 4 (add 1 (mul 2 {SQ2} (pow {M17} 3) {N17}))))",
    "phi(e^{-3 pi sqrt17}) / phi(e^{-pi sqrt17})")
add("cor:9sqrt17", "cubic", Q("1377 17"),
    f"(mul 1/3 (add 1 (mul {SQ2} {M17} (nthroot 3 {N17}))))",
    "phi(e^{-9 pi sqrt17}) / phi(e^{-pi sqrt17})")
add("cor:3:15", "cubic", Q("225 1"),
    f"(mul (div 1 (mul (sqrt 3) {R5})) (nthroot 4 (add 1 (mul 2 {SQ2} (pow (sub (sqrt 5) 2) 2)"
    f" (add 2 (sqrt 3)) (sqrt {B225P})))))",
    "phi(e^{-15 pi}) / phi(e^{-pi}) from the 3n theorem")
add("cor:45", "cubic", Q("2025 1"),
    f"(mul (div 1 (mul 3 {R5})) (add 1 (mul {SQ2} (div (sub 3 (sqrt 5)) 2)"
    f" (nthroot 3 (add 2 (sqrt 3))) {A225})))",
    "phi(e^{-45 pi}) / phi(e^{-pi})")
add("cor:45:alt", "cubic", Q("2025 1"),
    "(div (add 3 (sqrt 5) (mul (add (sqrt 3) (sqrt 5) (nthroot 4 60)) (nthroot 3 (add 2 (sqrt 3)))))"
    " (mul 3 (sqrt (add 10 (mul 10 (sqrt 5))))))",
    "first-notebook form of phi(e^{-45 pi}) / phi(e^{-pi})")
add("cor:3sqrt37", "cubic", Q("333 37"),
    f"(mul {INV_SQ3} (nthroot 4 (add 1 (mul 2 {SQ2} (pow (sub (sqrt 37) 6) 3/2)"
    f" (sqrt (add (mul 7 (sqrt 3)) (mul 2 (sqrt 37)))) {B333}))))",
    "phi(e^{-3 pi sqrt37}) / phi(e^{-pi sqrt37})")
add("cor:9sqrt37", "cubic", Q("2997 37"),
    f"(mul 1/3 (add 1 (mul {SQ2} (sqrt (sub (sqrt 37) 6))"
    f" (nthroot 6 (add (mul 7 (sqrt 3)) (mul 2 (sqrt 37)))) {A333})))",
    "phi(e^{-9 pi sqrt37}) / phi(e^{-pi sqrt37})")
add("e7", "cubic", "(proc phi2-quot 49 1)", E7,
    "phi^2(e^{-7 pi}) / phi^2(e^{-pi})")
add("cor:21", "cubic", Q("441 1"),
    f"(mul {INV_SQ3} (sqrt {E7}) (nthroot 4 (add 1 (mul 2 {SQ2} {D932}"
    f" (pow {H73} 3/2) (sqrt (add 2 (sqrt 3))) (pow {W7} 3/2)))))",
    "phi(e^{-21 pi}) / phi(e^{-pi})")
add("cor:63", "cubic", Q("3969 1"),
    f"(mul 1/3 (sqrt {E7}) (add 1 (mul {SQ2} {G49M} (sqrt {H73})"
    f" (nthroot 6 (add 2 (sqrt 3))) (sqrt {W7}))))",
    "phi(e^{-63 pi}) / phi(e^{-pi})")
add("cor:3sqrt85", "cubic", Q("765 85"),
    f"(mul {INV_SQ3} (nthroot 4 (add 1 (mul 2 {SQ2} (pow (sub (sqrt 5) 2) 2) (pow {A85} 3/2)"
    f" (nthroot 4 (add 16 (sqrt 255))) (pow (add 4 (sqrt 15)) 3/4)"
    f" (pow {X51A} 3/2) (pow {X51B} 3/2)))))",
    "phi(e^{-3 pi sqrt85}) / phi(e^{-pi sqrt85})")
add("cor:9sqrt85", "cubic", Q("6885 85"),
    f"(mul 1/3 (add 1 (mul {SQ2} (pow (sub (sqrt 5) 2) 2/3) (sqrt {A85})"
    f" (nthroot 12 (add 16 (sqrt 255))) (nthroot 4 (add 4 (sqrt 15))) (sqrt {X51A}) (sqrt {X51B}))))",
    "phi(e^{-9 pi sqrt85}) / phi(e^{-pi sqrt85})")
add("cor:3sqrt11", "cubic", Q("99 11"), f"(mul {INV_SQ3} (nthroot 4 (add {Z11} 3)))",
    "phi(e^{-3 pi sqrt11}) / phi(e^{-pi sqrt11})")
add("cor:9sqrt11", "cubic", Q("891 11"), f"(mul 1/3 (add 1 (nthroot 3 (add {Z11} 2))))",
    "phi(e^{-9 pi sqrt11}) / phi(e^{-pi sqrt11})")
add("cor:27sqrt3", "cubic", Q("2187 3"),
    f"(mul (div (add 1 {C2}) (pow 3 7/4)) (add 1 (mul {C2} (sub {C2} 1)"
    f" (div (add {C2} (pow 2 2/3) (nthroot 3 3)) (nthroot 3 (sub 9 (mul 2 (pow 3 4/3))))))))",
    "phi(e^{-27 pi sqrt3}) / phi(e^{-pi sqrt3})")
add("cor:81", "cubic", Q("6561 1"),
    f"(mul (div (add 1 {C9}) 9) (add 1 (mul {C2} (pow (div 1 {R81}) 8/9)"
    f" (nthroot 3 (sub (div (mul 3 (add (sqrt 3) 1)) (sub (add (sqrt 3) 1) (nthroot 3 {R81}))) 2)))))",
    "phi(e^{-81 pi}) / phi(e^{-pi})")
add("cor:sqrt5s3", "cubic", Q("45 5/9"),
    "(div (add (sqrt 5) (sqrt 3)) (add 3 (sqrt 3)))",
    "phi(e^{-3 pi sqrt5}) / phi(e^{-pi sqrt5/3})")
add("cor:sqrt7s3", "cubic", Q("63 7/9"),
    "(mul 1/12 (add 3 (sqrt 21)) (add 1 (sqrt (sub (mul 2 (sqrt 21)) 9))))",
    "phi(e^{-3 pi sqrt7}) / phi(e^{-pi sqrt7/3})")

# -- quintic corollaries ------------------------------------------------------

add("cor:5sqrt5", "quintic", Q("125 5"), f"(mul (pow 5 -3/4) {Q5})",
    "phi(e^{-5 pi sqrt5}) / phi(e^{-pi sqrt5}), trigonometric form")
add("cor:5sqrt5:alt", "quintic", Q("125 5"),
    f"(mul (pow 5 -3/4) (add 1 (nthroot 5 (mul 2 (sub (sqrt 5) 1) (add (sub 4 (sqrt 5)) {R2555})))"
    f" (nthroot 5 (mul 2 (sub (sqrt 5) 1) (sub (sub 4 (sqrt 5)) {R2555})))))",
    "radical form of the 5 sqrt5 quotient")
add("cor:5", "quintic", Q("25 1"), f"(div 1 {R5})", "phi(e^{-5 pi}) / phi(e^{-pi})")
add("eq:5-trig", "quintic", Q("25 1"), "(div 1 (mul (nthroot 4 5) (tan 1/5)))",
    "trigonometric form of phi(e^{-5 pi}) / phi(e^{-pi})")
add("cor:25", "quintic", Q("625 1"), f"(mul 1/5 {Q25})", "phi(e^{-25 pi}) / phi(e^{-pi})")
add("cor:25:alt", "quintic", Q("625 1"),
    f"(mul 1/5 (add 1 (nthroot 5 (mul 2 (add 1 (sqrt 5)) (add 3 {R552})))"
    f" (nthroot 5 (mul 2 (add 1 (sqrt 5)) (sub 3 {R552})))))",
    "radical form of phi(e^{-25 pi}) / phi(e^{-pi})")
add("cor:5sqrt3", "quintic", Q("75 3"), f"(div (sqrt (add 1 {P3})) (sqrt 5))",
    "phi(e^{-5 pi sqrt3}) / phi(e^{-pi sqrt3})")
add("cor:25sqrt3", "quintic", Q("1875 3"), S(P3), "phi(e^{-25 pi sqrt3}) / phi(e^{-pi sqrt3}) = s(p)")
add("cor:5sqrt7", "quintic", Q("175 7"), f"(div (sqrt (add 1 {P7})) (sqrt 5))",
    "phi(e^{-5 pi sqrt7}) / phi(e^{-pi sqrt7})")
add("cor:5sqrt7:alt", "quintic", Q("175 7"), f"(div (sqrt (add 1 {P7ALT})) (sqrt 5))",
    "5 sqrt7 quotient with the alternative p")
add("cor:25sqrt7", "quintic", Q("4375 7"), S(P7), "phi(e^{-25 pi sqrt7}) / phi(e^{-pi sqrt7}) = s(p)")
add("cor:25sqrt7:alt", "quintic", Q("4375 7"), S(P7ALT),
    "25 sqrt7 quotient with the alternative p")
add("cor:5:15", "quintic", Q("225 1"),
    f"(mul (div 1 (mul (sqrt 5) {R3})) (sqrt (add 1 {P9})))",
    "phi(e^{-15 pi}) / phi(e^{-pi}) from the 5n theorem")
add("cor:75", "quintic", Q("5625 1"), f"(div {S(P9)} {R3})", "phi(e^{-75 pi}) / phi(e^{-pi})")
add("cor:5sqrt13", "quintic", Q("325 13"), f"(div (sqrt (add 1 {P13})) (sqrt 5))",
    "phi(e^{-5 pi sqrt13}) / phi(e^{-pi sqrt13}), t a root of a cubic")
add("cor:25sqrt13", "quintic", Q("8125 13"), S(P13),
    "phi(e^{-25 pi sqrt13}) / phi(e^{-pi sqrt13}) = s(p)")
add("cor:35", "quintic", Q("1225 1"),
    f"(mul (div 1 (sqrt 5)) (sqrt {E7}) (sqrt (add 1 {P35})))",
    "phi(e^{-35 pi}) / phi(e^{-pi})")
add("cor:175", "quintic", Q("30625 1"), f"(mul (sqrt {E7}) {S(P35)})",
    "phi(e^{-175 pi}) / phi(e^{-pi})")
add("cor:G125", "quintic", "(proc G 125)",
    f"(mul 1/2 (nthroot 4 (div (add 11 (mul 5 (sqrt 5))) 2)) {P125})",
    "class invariant G_125")
add("cor:G625", "quintic", "(proc G 625)",
    f"(mul (div (add 11 (mul 5 (sqrt 5))) 4) {P625})",
    "class invariant G_625")
add("cor:25sqrt5", "quintic", Q("3125 5"), S(P125),
    "phi(e^{-25 pi sqrt5}) / phi(e^{-pi sqrt5}) = s(p)")
add("cor:125", "quintic", Q("15625 1"), f"(div {S(P625)} {R5})",
    "phi(e^{-125 pi}) / phi(e^{-pi})")

# -- cubic theta function a(q) ----------------------------------------------

add("cor:a:1/3", "a", "(proc a-phi2 1/3 3)", "(div (pow 3 3/4) 2)",
    "a(e^{-2 pi/sqrt3}) / phi^2(e^{-pi sqrt3})")
add("cor:a:1", "a", "(proc a-phi2 1 1)", "(nthroot 4 (add 1/4 (div 1 (mul 2 (sqrt 3)))))",
    "a(e^{-2 pi}) / phi^2(e^{-pi})")
add("cor:a:1:alt", "a", "(proc a-phi2 1 1)",
    "(div 1 (mul (nthroot 8 12) (sqrt (sub (sqrt 3) 1))))",
    "earlier equivalent form of a(e^{-2 pi}) / phi^2(e^{-pi})")
add("cor:a:3", "a", "(proc a-phi2 3 3)", "(div (mul (pow 3 3/4) (add 1 (pow 2 2/3))) 6)",
    "a(e^{-2 pi sqrt3}) / phi^2(e^{-pi sqrt3})")
add("cor:a:5", "a", "(proc a-phi2 5 5)",
    "(mul 1/3 (nthroot 4 (add 1 (mul 2 (sqrt 2) (pow (sub (sqrt 5) 2) 2)"
    " (pow (div (sub (sqrt 5) (sqrt 3)) (sqrt 2)) 3))))"
    " (add 1 (mul (div (sqrt 2) 2) (div (add (sqrt 5) (sqrt 3)) (sqrt 2)))))",
    "a(e^{-2 pi sqrt5}) / phi^2(e^{-pi sqrt5})")
add("cor:a:7", "a", "(proc a-phi2 7 7)",
    f"(mul 1/3 (nthroot 4 (add 1 (mul (pow (div (sub (sqrt 7) (sqrt 3)) 2) 3) (pow {S7M} 9))))"
    f" (add 1 (mul 1/4 {H73} (pow {S7P} 3))))",
    "a(e^{-2 pi sqrt7}) / phi^2(e^{-pi sqrt7})")
add("cor:a:9", "a", "(proc a-phi2 9 1)",
    f"(mul (div 1 (mul 3 (sqrt (sub (mul 6 (sqrt 3)) 9))))"
    f" (nthroot 4 (add 1 (mul 2 {SQ2} (pow (div 1 {R81}) 3) (div (add (sqrt 3) 1) {SQ2}))))"
    f" (add 1 (mul (div {SQ2} 2) (pow (div (sub (sqrt 3) 1) {SQ2}) 3) {R81})))",
    "a(e^{-6 pi}) / phi^2(e^{-pi})")
add("cor:a:25", "a", "(proc a-phi2 25 1)",
    f"(mul (div 1 (mul 3 (sub (mul 5 (sqrt 5)) 10)))"
    f" (nthroot 4 (add 1 (mul 2 {SQ2} (pow (sub (sqrt 5) 2) 2) (pow (sub 2 (sqrt 3)) 3) (pow {B225M} 3/2))))"
    f" (add 1 (mul (div {SQ2} 2) (pow (sub (sqrt 5) 2) 2) (add 2 (sqrt 3)) (sqrt {B225P}))))",
    "a(e^{-10 pi}) / phi^2(e^{-pi})")
add("cor:a:49", "a", "(proc a-phi2 49 1)",
    f"(mul 1/3 {E7}"
    f" (nthroot 4 (add 1 (mul 2 {SQ2} (pow (sub (mul 2 (sqrt 7)) (mul 3 (sqrt 3))) 3/2)"
    f" (pow (sub 2 (sqrt 3)) 3/2) (pow {W7INV} 9/2) {D932})))"
    f" (add 1 (mul (div {SQ2} 2) {D932} (sqrt (add (mul 2 (sqrt 7)) (mul 3 (sqrt 3))))"
    f" (sqrt (add 2 (sqrt 3))) (pow {W7} 3/2))))",
    "a(e^{-14 pi}) / phi^2(e^{-pi})")
add("cor:a:81", "a", "(proc a-phi2 81 1)",
    f"(mul (div (pow (add 1 {C9}) 2) 27)"
    f" (nthroot 4 (add 1 (pow (sub (div (mul 3 (add (sqrt 3) 1)) (add (sqrt 3) 1 (mul 2 (nthroot 3 {R81})))) 1) 3)))"
    f" (add 1 (mul 1/2 (pow (div 1 {R81}) 8/3)"
    f" (sub (div (mul 3 (add (sqrt 3) 1)) (sub (add (sqrt 3) 1) (nthroot 3 {R81}))) 2))))",
    "a(e^{-18 pi}) / phi^2(e^{-pi})")

# -- radical simplifications used in the proofs -----------------------------

add("rad:cor3-chain", "radical",
    "(mul (div 1 (sqrt 3)) (nthroot 4 (add 1 (mul 2 (sqrt 2) (div (add 1 (sqrt 3)) (sqrt 2))))))",
    f"(div 1 {R3})", "cubic corollary at n = 1 before simplification")
add("rad:cor3-mid", "radical", "(nthroot 4 (div (add 3 (mul 2 (sqrt 3))) 9))", f"(div 1 {R3})",
    "((3 + 2 sqrt3)/9)^(1/4) = (6 sqrt3 - 9)^(-1/4)")
add("rad:G5", "radical", "(nthroot 4 (div (add 1 (sqrt 5)) 2))", "(nthroot 12 (add 2 (sqrt 5)))",
    "two forms of G_5")
add("rad:21", "radical", "(nthroot 6 (div (add 5 (sqrt 21)) 2))", f"(nthroot 3 {H73})",
    "((5 + sqrt21)/2)^(1/6) = ((sqrt7 + sqrt3)/2)^(1/3)")
add("rad:117", "radical", f"(pow {A117} 3)", B117, "cube of the G_117 radical factor")
add("rad:golden6", "radical", "(pow (div (sub (sqrt 5) 1) 2) 6)", "(pow (sub (sqrt 5) 2) 2)",
    "((sqrt5 - 1)/2)^6 = (sqrt5 - 2)^2")
add("rad:225", "radical", f"(pow {A225} 3)", f"(sqrt {B225P})", "cube of the G_225 radical factor")
add("rad:333", "radical", f"(pow {A333} 3)", B333, "cube of the G_333 radical factor")
add("rad:441a", "radical", "(div (add (sqrt (add 4 (sqrt 7))) (nthroot 4 7)) 2)", G49P,
    "two forms of G_49")
add("rad:441b", "radical", "(pow (div (sub (sqrt (add 4 (sqrt 7))) (nthroot 4 7)) 2) 6)", D932,
    "sixth power of 1/G_49")
add("rad:63", "radical", G49P, f"(pow {G49M} -1/2)", "reciprocal form of G_49")
add("rad:765", "radical", "(sqrt (div (add 3 (sqrt 5)) 2))", "(div (add (sqrt 5) 1) 2)",
    "sqrt((3 + sqrt5)/2) = (sqrt5 + 1)/2")
add("rad:G11", "radical", f"(mul (pow 2 -1/4) (rootof (coeffs -2 2 -2 1) 1 2))",
    "(div (add (sub (nthroot 3 (add (mul 3 (sqrt 33)) 17)) (nthroot 3 (sub (mul 3 (sqrt 33)) 17))) 2)"
    " (mul 3 (nthroot 4 2)))",
    "root of x^3 - 2x^2 + 2x - 2 against its Cardano form")
add("rad:G99", "radical", f"(div (mul 2 (sqrt 2) (pow {G(99)} 3)) (pow {G(11)} 9))",
    f"(add {Z11} 2)", "2 sqrt2 G_99^3 / G_11^9")
add("rad:5/9", "radical", f"(div (mul (sqrt 2) {G(5)}) (pow {G('5/9')} 3))",
    "(div (sub 3 (sqrt 5)) (sub (sqrt 5) (sqrt 3)))", "sqrt2 G_5 / G_{5/9}^3")
add("rad:7/9", "radical", f"(div 1 (mul (sqrt (div (add 5 (sqrt 21)) 2)) (pow {S7M} 3)))",
    "(mul 1/4 (add (sub (sqrt 21) 1) (sqrt (mul 6 (sub (sqrt 21) 3)))))",
    "radical factor in the 7/9 corollary (reciprocal orientation)")
add("rad:G9a", "radical", "(nthroot 3 (div (add 1 (sqrt 3)) (sqrt 2)))",
    "(pow (div (sub (sqrt 3) 1) (sqrt 2)) -1/3)", "reciprocal form of G_9")
add("rad:G9G225", "radical",
    "(mul (pow (div (sub (sqrt 3) 1) (sqrt 2)) 5/3) (nthroot 3 (add 2 (sqrt 3))))",
    "(sqrt (sub 2 (sqrt 3)))", "G_9 and G_225 combination")
add("rad:sin-pi-5", "radical", "(sin 1/5)", "(div (sqrt (sub 10 (mul 2 (sqrt 5)))) 4)",
    "sin(pi/5) by radicals")
add("rad:cos-pi-5", "radical", "(cos 1/5)", "(div (add (sqrt 5) 1) 4)", "cos(pi/5) by radicals")
add("rad:tan-pi-5", "radical", "(tan 1/5)", R552, "tan(pi/5) by radicals")
for sign, op, inv in (("plus", "add", "sub"), ("minus", "sub", "add")):
    pp = "(sub (sqrt 5) 1)"
    add(f"rad:5sqrt5-i:{sign}", "radical",
        f"(mul 1/4 ({op} (add (pow (sub {pp} 1) 2) 7) (mul (sub 4 {pp}) (sqrt (add 4 (pow {pp} 2))))))",
        f"({op} (sub 4 (sqrt 5)) {R2555})",
        f"quintic radicand at p = sqrt5 - 1, {sign} branch")
    add(f"rad:5sqrt5-trig:{sign}", "radical", f"({op} (sub 4 (sqrt 5)) {R2555})",
        f"(div ({op} (cos 1/5) (sin 1/5)) ({inv} 1 (sin 1/5)))",
        f"trigonometric form of the {sign} radicand")
    pp = "(add (sqrt 5) 1)"
    add(f"rad:25-1:{sign}", "radical",
        f"(mul (div {pp} 2) ({op} (add (pow (sub {pp} 1) 2) 7) (mul (sub 4 {pp}) (sqrt (add 4 (pow {pp} 2))))))",
        f"(mul 2 (add 1 (sqrt 5)) ({op} 3 {R552}))",
        f"quintic radicand at p = sqrt5 + 1, {sign} branch")
    add(f"rad:25-2:{sign}", "radical", f"(mul 2 (add 1 (sqrt 5)) ({op} 3 {R552}))",
        f"(mul 8 ({op} (mul 3 (cos 1/5)) (sin 1/5)))",
        f"trigonometric form at p = sqrt5 + 1, {sign} branch")
add("rad:5sqrt5-ii", "radical", "(mul 2 (sub (sqrt 5) 1))", "(div 2 (cos 1/5))",
    "2p = 2/cos(pi/5) at p = sqrt5 - 1")
add("rad:cos5", "radical", "(div (add 11 (mul 5 (sqrt 5))) 4)", "(mul 16 (pow (cos 1/5) 5))",
    "(11 + 5 sqrt5)/4 = 16 cos^5(pi/5)")
add("rad:G125-unit", "radical",
    "(mul (nthroot 4 (div (add 11 (mul 5 (sqrt 5))) 2)) (pow (div (add 1 (sqrt 5)) 2) -5/4))", "1",
    "unit factor in the 25 sqrt5 corollary")
add("rad:G625-unit", "radical",
    "(mul 2 (div (add 11 (mul 5 (sqrt 5))) 4) (pow (div (add 1 (sqrt 5)) 2) -5))", "1",
    "unit factor in the 125 corollary")
add("rad:a1-chain", "radical",
    "(mul (nthroot 4 (mul 3 (sub (mul 2 (sqrt 3)) 3))) (div (add 3 (sqrt 3)) 6))",
    "(nthroot 4 (div (add 3 (mul 2 (sqrt 3))) 12))", "a(q) corollary at n = 1, middle step")

# -- theorem instances over the overview tables ------------------------------

TABLE1 = ["1/3", 1, 3, 5, 7, 9, 13, 17, 25, 37, 49, 85, 11, 27, 81]
TABLE2 = ["1/5", 1, 3, 7, 9, 13, 49, 5, 25]
A_EXTRA = [11, 13, 17, 27, 37, 85]


def _n(n):
    return Fraction(n)


for n in TABLE1:
    g1, g9 = G(n), G(9 * _n(n))
    add(f"thm:3n@{n}", "cubic", Q(f"{9 * _n(n)} {n}"),
        f"(mul {INV_SQ3} (nthroot 4 (add 1 (div (mul 2 {SQ2} (pow {g9} 3)) (pow {g1} 9)))))",
        f"3n quotient theorem at n = {n} with tabulated invariants")
    add(f"thm:9n@{n}", "cubic", Q(f"{81 * _n(n)} {n}"),
        f"(mul 1/3 (add 1 (div (mul {SQ2} {g9}) (pow {g1} 3))))",
        f"9n quotient theorem at n = {n} with tabulated invariants")

for n in TABLE2:
    g1, g25 = G(n), G(25 * _n(n))
    p = f"(div (mul 2 {g25}) (pow {g1} 5))"
    add(f"thm:5n@{n}", "quintic", Q(f"{25 * _n(n)} {n}"),
        f"(div (sqrt (add 1 {p})) (sqrt 5))",
        f"5n quotient theorem at n = {n} with tabulated invariants")
    add(f"thm:25n@{n}", "quintic", Q(f"{625 * _n(n)} {n}"), S(p),
        f"25n quotient theorem at n = {n} through s(p)")

for n in ["1/3", 1, 3, 5, 7, 9, 25, 49, 81] + A_EXTRA:
    g1, g9 = G(n), G(9 * _n(n))
    add(f"thm:a@{n}", "a", f"(proc a-phi2 {n} {n})",
        f"(mul 1/3 (nthroot 4 (add 1 (div (mul 2 {SQ2} (pow {g1} 3)) (pow {g9} 9))))"
        f" (add 1 (div (mul {SQ2} (pow {g9} 3)) (mul 2 (pow {g1} 9)))))",
        f"a(q) theorem at n = {n} with tabulated invariants")


def main() -> None:
    seen = set()
    lines = ["# id\tlhs\trhs\tfamily | description"]
    for ident, lhs, rhs, family, desc in ENTRIES:
        if ident in seen:
            raise SystemExit(f"duplicate id {ident}")
        seen.add(ident)
        sides = []
        for side in (lhs, rhs):
            if side.startswith("(proc "):
                sides.append(" ".join(side.split()))
            else:
                sides.append(print_closed(parse_closed(side)))
        lines.append("\t".join([ident, sides[0], sides[1], f"{family} | {desc}"]))
    OUT.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(ENTRIES)} identities to {OUT.relative_to(ROOT)}")


if __name__ == "__main__":
    main()
