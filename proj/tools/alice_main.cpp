#include "alice/cli.hpp"

int main(int argc, char** argv) { return alice::run_cli(argc, argv); }
