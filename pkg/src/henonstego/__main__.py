import sys

from henonstego.cli import main

sys.exit(main())
