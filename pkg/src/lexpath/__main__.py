from lexpath.cli import main
import sys

sys.exit(main())
