#include "torusmaps/cli.hpp"

int main(int argc, char** argv) { return torusmaps::run_cli(argc, argv); }
