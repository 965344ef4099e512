#include "fsplit/cli.hpp"

int main(int argc, char** argv) { return fsplit::cli::run_cli(argc, argv); }
