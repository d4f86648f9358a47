import sys

from bei.cli import main

sys.exit(main())
