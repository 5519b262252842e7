"""Command-line interface (placeholder; filled in with the solver)."""


def main(argv=None) -> int:
    raise SystemExit("symsolve CLI not wired up yet")
