from asymmetric_blotto.main import cli_main

cli_main()
