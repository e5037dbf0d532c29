#include "doldef/cli.hpp"

int main(int argc, char** argv) { return doldef::run_cli(argc, argv); }
