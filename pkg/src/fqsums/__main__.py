import sys

from fqsums.cli import main

sys.exit(main())
