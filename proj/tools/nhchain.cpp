#include "nhkit/cli.hpp"

int main(int argc, char** argv) { return nhkit::cli::main_entry(argc, argv); }
