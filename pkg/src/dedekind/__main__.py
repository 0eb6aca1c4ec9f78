import sys

from dedekind.cli import main

sys.exit(main())
