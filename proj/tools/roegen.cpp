#include "roegen/cli.hpp"

int main(int argc, char** argv) { return roegen::cli::run(argc, argv); }
