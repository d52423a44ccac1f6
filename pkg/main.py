"""Entry point for the Weierstrass bounds command line."""
from cli import cli


def main() -> int:
    """Run the command line and return its exit code."""
    try:
        cli.main(prog_name="weierstrass")
    except SystemExit as exc:
        return int(exc.code or 0)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
