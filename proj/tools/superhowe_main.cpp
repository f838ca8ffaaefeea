#include "superhowe/cli.hpp"

int main(int argc, char** argv) { return superhowe::cli::run(argc, argv); }
