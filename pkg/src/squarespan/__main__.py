from squarespan.cli import main

main()
