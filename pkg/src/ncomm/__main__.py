import sys

from ncomm.cli import main

sys.exit(main())
