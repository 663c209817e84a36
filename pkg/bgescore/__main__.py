import sys

from bgescore.cli import main

sys.exit(main())
