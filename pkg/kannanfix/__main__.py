import sys

from kannanfix.cli.main import main


sys.exit(main())
