#include "lgroup/cli.hpp"

int main(int argc, char** argv) { return lgroup::run_cli(argc, argv); }
