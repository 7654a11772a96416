#include "tautkit_cli/commands.hpp"

int main(int argc, char** argv) { return tautkit::cli::run(argc, argv); }
