import sys

from genent.cli import main

sys.exit(main())
