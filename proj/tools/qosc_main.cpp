#include "qosc/cli.hpp"

int main(int argc, char** argv) { return qosc::run_cli(argc, argv); }
