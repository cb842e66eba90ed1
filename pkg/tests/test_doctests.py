import doctest

from mnrules import partitions, perm, poly, quantum, schubert, symfun


def test_doctests_pass():
    attempted = 0
    for module in (partitions, perm, poly, quantum, schubert, symfun):
        result = doctest.testmod(module)
        assert result.failed == 0, f"doctest failures in {module.__name__}"
        attempted += result.attempted
    assert attempted >= 10
