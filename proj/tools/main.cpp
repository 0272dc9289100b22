#include "cli.hpp"

int main(int argc, char** argv) { return ucs::cli::main(argc, argv); }
