import sys

from ipstree.cli import main

sys.exit(main())
