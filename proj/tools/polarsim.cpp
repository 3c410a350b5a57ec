#include "polarga/cli.hpp"

int main(int argc, char** argv) { return polarga::cli_main(argc, argv); }
