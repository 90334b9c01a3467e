#include "weightss/cli.hpp"

int main(int argc, char** argv) { return weightss::cli::run(argc, argv); }
