import pytest

from torsionk import CW2Complex


@pytest.fixture
def announce(request):
    """Write a line to the terminal even while output capture is active."""
    reporter = request.config.pluginmanager.get_plugin("terminalreporter")

    def _announce(message):
        if reporter is not None:
            reporter.write_line(message)

    return _announce


def torus_minimal():
    """One vertex, loops a and b, one square face a b a^-1 b^-1."""
    return CW2Complex.build(
        ["*"], [("a", "*", "*"), ("b", "*", "*")],
        [("f", [("a", 1), ("b", 1), ("a", -1), ("b", -1)])])


def sphere_minimal():
    """One vertex and one 2-cell with the empty attaching word."""
    return CW2Complex.build(["*"], [], [("f", [])])


def sphere_equatorial():
    """Two vertices, two meridian edges, two hemisphere faces."""
    return CW2Complex.build(
        ["N", "S"], [("e1", "N", "S"), ("e2", "N", "S")],
        [("upper", [("e1", 1), ("e2", -1)]), ("lower", [("e2", 1), ("e1", -1)])])


def wedge_of_circles():
    """Two loops, no 2-cells."""
    return CW2Complex.build(["*"], [("a", "*", "*"), ("b", "*", "*")], [])


def projective_plane():
    """One loop attached to a disk along a^2."""
    return CW2Complex.build(["*"], [("a", "*", "*")], [("f", [("a", 1), ("a", 1)])])


def klein_bottle():
    """One vertex, loops a and b, face a b a^-1 b."""
    return CW2Complex.build(
        ["*"], [("a", "*", "*"), ("b", "*", "*")],
        [("f", [("a", 1), ("b", 1), ("a", -1), ("b", 1)])])
