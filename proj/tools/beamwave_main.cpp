#include "beamwave/cli/commands.hpp"

int main(int argc, char** argv) { return beamwave::cli::run_cli(argc, argv); }
