"""Write the three figure data series as TSV files into a directory (default: ./figures)."""

import sys
from pathlib import Path

from zetatail.cli import main as cli


def main(out_dir: str = "figures") -> int:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for which in ("1", "2", "3"):
        code = cli(["figures", which, "--out", str(out / f"figure{which}.tsv")])
        if code:
            return code
        print(out / f"figure{which}.tsv")
    return 0


if __name__ == "__main__":
    sys.exit(main(*sys.argv[1:2]))
