from bloch_lab.cli import main

raise SystemExit(main())
