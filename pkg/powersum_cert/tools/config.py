#!/usr/bin/env python3
"""
powersum-cert config - Configuration Management Commands

Generate, validate and display EngineConfig files.

Author: powersum-cert Development Team
License: Apache License 2.0
"""

import json
from pathlib import Path

import click
import yaml

from ..core.engine_config import EngineConfig
from ..core.exceptions import ConfigurationError
from ..utils.logger import get_logger


@click.group()
def config():
    """
    Manage powersum-cert configuration files

    Generate templates, validate settings and show the effective
    configuration.
    """
    pass


@config.command()
@click.option("--output", "-o", type=click.Path(), default="powersum-cert.yaml",
              help="Output configuration file")
@click.option("--format", "fmt", type=click.Choice(["yaml", "json"]), default="yaml",
              help="Output format")
@click.option("--max-k", type=int, default=None, help="Bernoulli/Euler table size")
@click.option("--workers", type=int, default=None, help="Worker processes")
def generate(output: str, fmt: str, max_k, workers):
    """Generate a configuration template"""
    logger = get_logger()
    overrides = {}
    if max_k is not None:
        overrides["max_k"] = max_k
    if workers is not None:
        overrides["workers"] = workers

    try:
        engine_config = EngineConfig(**overrides)
        output_path = Path(output)
        engine_config.save_to_file(str(output_path), format=fmt)
    except ConfigurationError as e:
        raise click.ClickException(str(e))

    click.echo(f"Configuration template generated: {output_path}")
    logger.info("Generated configuration template", path=str(output_path), format=fmt)


@config.command()
@click.argument("config_file", type=click.Path(exists=True))
@click.option("--verbose", "-v", is_flag=True, help="Print the validated settings")
def validate(config_file: str, verbose: bool):
    """Validate a configuration file"""
    logger = get_logger()
    try:
        engine_config = EngineConfig.from_file(config_file)
    except ConfigurationError as e:
        logger.error("Configuration validation failed", path=config_file, error=e.message)
        raise click.ClickException(f"Configuration validation failed: {e}")

    click.echo(f"Configuration file is valid: {config_file}")
    if verbose:
        click.echo("")
        for key, value in engine_config.to_dict().items():
            click.echo(f"  {key}: {value}")
    logger.info("Configuration validation successful", path=config_file)


@config.command()
@click.option("--format", "fmt", type=click.Choice(["yaml", "json"]), default="yaml",
              help="Output format")
@click.pass_context
def show(ctx: click.Context, fmt: str):
    """Show the effective configuration"""
    engine_config = getattr(ctx.obj, "config", None) or EngineConfig.from_environment()
    data = engine_config.to_dict()
    if fmt == "json":
        click.echo(json.dumps(data, indent=2))
    else:
        click.echo(yaml.dump(data, default_flow_style=False, indent=2).rstrip())
