#include "finfree/cli.hpp"

int main(int argc, char** argv) { return finfree::cli_run(argc, argv); }
