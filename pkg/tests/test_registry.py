import pytest

from starbrace.registry import registered_ids, verify_proposition
from starbrace.table_core import CapacityError, InputError


@pytest.mark.parametrize("ident", registered_ids())
def test_every_claim_holds_up_to_order_3(ident):
    rep = verify_proposition(ident, 3)
    assert rep.passed, rep.failure
    assert rep.checked > 0


def test_registry_at_order_5(monkeypatch):
    # order 5 is the first order with non-cro_li models, so iff claims are
    # exercised in both directions here
    monkeypatch.setenv("STARBRACE_MAX_ORDER", "5")
    for ident in registered_ids():
        rep = verify_proposition(ident, 5)
        assert rep.passed, (ident, rep.failure)


def test_wsb_claims_at_order_4():
    for ident in ("T5.23", "T5.13", "T5.15", "L5.12", "P5.4"):
        assert verify_proposition(ident, 4).passed


def test_informational_probe_reports_data():
    rep = verify_proposition("R4.10", 3)
    assert rep.passed
    assert any("conj-star" in n for n in rep.notes)


def test_errors(monkeypatch):
    monkeypatch.delenv("STARBRACE_MAX_ORDER", raising=False)
    with pytest.raises(InputError):
        verify_proposition("P9.9")
    with pytest.raises(CapacityError):
        verify_proposition("P4.6", 5)
    with pytest.raises(InputError):
        verify_proposition("P4.6", 0)


def test_failure_is_reported(monkeypatch):
    import starbrace.registry as reg

    def broken(ctx):
        raise reg._Fail("model x: forced")

    monkeypatch.setitem(reg.REGISTRY, "P4.6", reg._Entry("forced", broken))
    rep = verify_proposition("P4.6", 2)
    assert not rep.passed and "forced" in rep.failure
