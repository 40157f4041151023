#include "commands.hpp"

int main(int argc, char** argv) { return dedekind::cli::run_cli(argc, argv); }
