from depspace.cli import main

main()
