#include <gpd/cli.hpp>

int main(int argc, char** argv) { return gpd::run_command(argc, argv); }
