from groverfleet.cli import main

raise SystemExit(main())
