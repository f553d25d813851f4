#include "lodcloud/cli.hpp"

int main(int argc, char** argv) { return lodcloud::run_cli(argc, argv); }
