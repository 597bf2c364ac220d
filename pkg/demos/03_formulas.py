"""Closed-form regularities; no algebra is run here."""
from binedge.families import Circ, F, Fan, FanSpec, Star, circ_chain
from binedge.formulas import FTail, reg_circ_chain, reg_formula, reg_result_to_json

cases = {
    "F_1": F(1), "F_5": F(5),
    "F_3 o F_3": circ_chain([3, 3]),
    "F_5 o F_2": Circ(F(5), F(2)),
    "F_2 * F_2": Star(F(2), F(2)),
    "pure 2-fan on K_5": Fan(FanSpec.pure_spec(5, [[1, 2], [3]])),
    "fan, branch sizes (3, 4)": Fan(FanSpec(4, [((1, 2), (3, 4))])),
    "mixed fan": Fan(FanSpec(4, [((1,), (2,)), ((2, 3), (3, 5))])),
    "F_3 o fan": Circ(F(3), Fan(FanSpec.pure_spec(3, [[1, 2]])), None, 4),
    "F3oF4oF3oF3oF3": circ_chain([3, 4, 3, 3, 3]),
}
for name, e in cases.items():
    print(f"{name:>26}: {reg_result_to_json(reg_formula(e))}")

for t in range(1, 7):
    print(f"t={t}: chain of {t} threes then F_3 ->", reg_circ_chain([3] * t, FTail(3)))
