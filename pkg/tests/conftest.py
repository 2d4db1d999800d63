import numpy as np
import pytest

# One line per acceptance criterion, keyed by test function name; the
# terminal summary prints PASS/FAIL for each after the run.
CRITERIA = {
    "test_irls_oracle_equivalence": "IRLS oracle equivalence: 20 toy fits match independent Newton within 1e-6 per coefficient, < 5 s",
    "test_binomial_pvalue_enumeration": "Binomial p-value: matches exact rational enumeration for K<=10, m in {2,10,20} within 1e-12; (x=1,K=1,m=20) = 0.05 exactly",
    "test_placement_uniformity": "Placement uniformity: chi-square over 4000 seeded builds (m=20) below the 0.999 quantile of chi2_19, < 60 s",
    "test_permutation_preserves": "Permutation nulls: group sizes and response multiset preserved exactly on 10,000 randomized inputs",
    "test_bin_rule": "Binned-residual bin rule: n=2916 -> 54 bins, n=10 -> 3, equal-count partition on randomized n",
    "test_empirical_logit_values": "Empirical logit: (s=3,c=10) -> adj_logit -0.7621 (+-1e-4), finite at s in {0,c}, n=55 g=5 -> five bins of 11",
    "test_deficiency_detectability": "Deficiency detectability: observed panel beats >= 18 of 19 nulls in >= 80% of 50 seeds, < 2 min",
    "test_null_calibration": "Null calibration: with b2=0 the observed panel ranks first in <= 15% of 100 seeds",
    "test_rendering_determinism": "Rendering determinism: golden-file byte equality for one lineup of each plot kind",
    "test_service_crash_recovery": "Service crash recovery: replaying the event log reconstructs identical session state",
}


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Force kernel compilation before any timed test runs."""
    from lineuplab import kernels

    kernels.norm_quantile(np.array([0.3, 0.7]))
    x = np.linspace(-1.0, 1.0, 12)
    X = np.column_stack([np.ones(12), x])
    y = (x > 0).astype(np.float64)
    kernels.irls_logistic(X, y, 50, 1e-8, 30.0, 10)
    kernels.binned_sums(np.arange(5.0), np.arange(5.0), 2)
    kernels.fisher_yates(4, np.array([0.1, 0.5, 0.9]))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    outcomes: dict[str, str] = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            nodeid = getattr(rep, "nodeid", "") or ""
            if "test_acceptance.py" not in nodeid:
                continue
            name = nodeid.split("::")[-1]
            if name not in CRITERIA:
                continue
            if status in ("failed", "error"):
                outcomes[name] = "FAIL"
            elif outcomes.get(name) != "FAIL":
                outcomes[name] = "PASS"
    if not outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for name, description in CRITERIA.items():
        if name in outcomes:
            terminalreporter.write_line(f"[{outcomes[name]}] {description}")
