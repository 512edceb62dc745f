#include "mcgl/cli.hpp"

int main(int argc, char** argv) { return mcgl::cli::main(argc, argv); }
