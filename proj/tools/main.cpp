#include "cli.hpp"

int main(int argc, char** argv) { return aptile::cli_run(argc, argv); }
