"""Write the sample descriptor and registry files under data/."""

from pathlib import Path

from ijord import schema
from ijord.endo import DualType
from ijord.ffpoly import Involution, SelfDualPoly, x_minus_one, x_plus_one
from ijord.golden import maximal_descriptor
from ijord.jordan import depth_zero_descriptor, descriptor_context, make_descriptor
from ijord.endo import EndoClassInvariants
from ijord.lusztig import GroupKind, GroupType, datum_validate
from ijord.params import synthetic_registry

OUT = Path(__file__).resolve().parent.parent / "data"


def write(name, doc):
    (OUT / name).write_text(schema.dumps(doc))
    print("wrote", OUT / name)


def main():
    OUT.mkdir(exist_ok=True)
    unram = maximal_descriptor(DualType.UNRAMIFIED, q=3)
    ram = maximal_descriptor(DualType.RAMIFIED, q=3)
    write("maximal_unramified.json", schema.descriptor_json(unram))
    write("maximal_ramified.json", schema.descriptor_json(ram))

    # Sp(2) x Sp(0) at depth zero: {X-1: 1, X+1: 2} on the first factor
    ctx = descriptor_context(3, depth_zero_descriptor(3).endo)
    dz = depth_zero_descriptor(3, n0=1, a0={x_minus_one(ctx): 1, x_plus_one(ctx): 2})
    write("depth_zero.json", schema.descriptor_json(dz))

    # a ramified class of degree 2 with N = 3 beside a depth-zero part
    endo = EndoClassInvariants("R", 2, 2, 1, DualType.RAMIFIED)
    rctx = descriptor_context(3, endo)
    sp = datum_validate(GroupType(GroupKind.SYMPLECTIC, rctx), 1, {x_minus_one(rctx): 1})
    so = datum_validate(GroupType(GroupKind.ODD_SO, rctx), 2, {SelfDualPoly.of(rctx, (1, 0, 1)): 1})
    part = make_descriptor(3, endo, 3, (sp, so), {(1, 2): Involution.NEGATE}, chi_twist=True)
    write("general.json", schema.descriptor_json(([dz, part, unram], None)))

    reg = synthetic_registry(6, seed=0, max_irrep_dim=5)
    write("registry.json", schema.registry_json(reg))
    req = {"version": schema.VERSION, "kind": "enumeration_request", "N": 1,
           "registry": {k: v for k, v in schema.registry_json(reg).items() if k not in ("version", "kind")}}
    write("enumerate_n1.json", req)


if __name__ == "__main__":
    main()
