"""Driving the command-line tool (same as running `strongctrl ...` in a shell).

Run:  python3 demos/06_command_line.py
"""
import subprocess
import sys
from pathlib import Path

DATA = Path(__file__).parent / "data"
base = [sys.executable, "-m", "strongctrl"]


def run(*args):
    print("$ strongctrl", " ".join(args))
    proc = subprocess.run(base + list(args), capture_output=True, text=True)
    print(proc.stdout + proc.stderr, end="")
    print(f"[exit {proc.returncode}]\n")


chain = ["--a", str(DATA / "chain_A.txt"), "--b", str(DATA / "chain_B.txt")]
run("analyze", *chain, "--domain", "discrete", "--variation", "tv", "--horizon", "6")
run("analyze", *chain, "--domain", "discrete", "--variation", "tv", "--horizon", "3")
run("analyze", *chain, "--domain", "discrete", "--variation", "lti", "--horizon", "3", "--output", "text")

nil = ["--a", str(DATA / "nilpotent_A.txt"), "--b", str(DATA / "nilpotent_B.txt")]
run("analyze", *nil, "--domain", "continuous", "--variation", "tv", "--output", "text")
