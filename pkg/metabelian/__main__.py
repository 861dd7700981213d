from metabelian.cli import main

main()
