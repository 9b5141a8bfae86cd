#include "cli.hpp"

int main(int argc, char** argv) { return bded::cli::run(argc, argv); }
