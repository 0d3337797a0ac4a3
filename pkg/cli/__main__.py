import sys

from cli.runner import run

sys.exit(run())
