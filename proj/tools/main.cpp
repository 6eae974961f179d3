#include "haarhankel/cli.hpp"

int main(int argc, char** argv) { return haarhankel::cli::run(argc, argv); }
