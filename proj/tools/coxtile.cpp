#include "coxtile/cli.hpp"

int main(int argc, char** argv) { return coxtile::cli_main(argc, argv); }
