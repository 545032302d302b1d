import subprocess

import pytest


def cli(*args):
    subprocess.run(["catacool", *args], check=True)


@pytest.fixture(scope="session")
def golden(tmp_path_factory):
    """Golden CSVs generated through the catacool command line."""
    root = tmp_path_factory.mktemp("golden")
    cfg = root / "small.cfg"
    cfg.write_text("p2h_points=6\nfrac_points=5\nn_values=2,3\n")
    cli("optimal-qubit", "--sweep", "--config", str(cfg), "-o", str(root / "fig6.csv"))
    cli("enhance", "--sweep", "cold", "--points", "25", "-o", str(root / "fig7.csv"))
    cli("enhance", "--sweep", "hot", "--x-cold", "0.4", "--points", "25", "-o", str(root / "fig8.csv"))
    cli("mbc-vs-cc", "--sweep", "xi", "--points", "20", "-o", str(root / "fig10.csv"))
    cli("mbc-vs-cc", "--sweep", "gamma", "--points", "30", "-o", str(root / "fig11.csv"))
    cli("thermometry", "--ratio", "0.3", "--points", "40", "-o", str(root / "fig13.csv"))
    return root
