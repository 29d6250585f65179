#!/usr/bin/env python3
"""
powersum-cert Command-Line Tools

Author: powersum-cert Development Team
License: Apache License 2.0
"""
