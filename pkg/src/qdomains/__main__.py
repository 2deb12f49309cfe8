import sys

from qdomains.cli import main

sys.exit(main())
