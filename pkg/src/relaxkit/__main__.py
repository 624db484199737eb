from relaxkit.cli import main

main()
