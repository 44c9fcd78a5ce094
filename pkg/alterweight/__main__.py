from alterweight.main import cli

cli(prog_name="alterweight")
