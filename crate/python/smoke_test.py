"""Smoke test for the compiled extension.

Build it first:
    cargo build --release -p partial-hopf-py
    cp target/release/libpartial_hopf_py.so python/partial_hopf.so
"""

import json
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import partial_hopf as ph  # noqa: E402


def main() -> None:
    t4 = ph.HopfAlgebra.taft(4)
    assert (t4.dim, t4.order) == (16, 4), t4
    assert t4.validate().passed

    names = [f.name for f in ph.action_families(t4)]
    assert names == ["epsilon", "lambda0[<g^2>]", "lambda_alpha"], names
    lam = ph.action_families(t4)[-1]
    assert lam.params == ["alpha"]
    values = dict(lam.table())
    assert values["g^3x^2"] == "(1 - q)*alpha^2", values
    assert lam.verify_partial() and lam.verify_symmetric() and lam.verify_idempotent()

    for z in ph.coaction_families(t4):
        assert z.verify_partial() and z.verify_symmetric(), z

    result = ph.classify(ph.HopfAlgebra.taft(6))
    assert result.exhaustive
    assert len(result.families) == ph.family_count(6) == 4
    assert all(f.matches is not None for f in result.families)

    h8 = ph.HopfAlgebra.nichols(3)
    result = ph.classify(h8, shortcuts=False)
    assert [len(f.family.params) for f in result.families] == [0, 2]

    assert ph.self_duality(ph.HopfAlgebra.taft(3))
    assert ph.self_duality(h8)
    assert all(ok for _, ok in ph.check_example_tables())

    assert ph.q_binomial(4, 2) == ph.q_binomial(4, 2, None)
    assert ph.q_binomial(4, 2, 4) == "0"

    text = t4.to_json()
    again = ph.HopfAlgebra.from_json(text)
    assert again.to_json() == text

    broken = json.loads(text)
    broken["counit"][broken["basis"].index("g")] = "-1"
    try:
        ph.HopfAlgebra.from_json(json.dumps(broken))
    except ValueError:
        pass
    else:
        raise AssertionError("corrupted counit accepted")

    try:
        ph.HopfAlgebra.taft(1)
    except ValueError:
        pass
    else:
        raise AssertionError("taft(1) accepted")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
