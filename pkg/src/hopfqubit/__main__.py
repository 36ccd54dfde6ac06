import sys

from hopfqubit.cli import main

sys.exit(main())
