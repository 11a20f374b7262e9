#pragma once

#include "ybhecke/schubgroth/identities.hpp"
#include "ybhecke/schubgroth/tables.hpp"
#include "ybhecke/schubgroth/transition.hpp"
