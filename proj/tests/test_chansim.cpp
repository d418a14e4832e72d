#include <doctest.h>
TEST_SUITE("chansim") {}
