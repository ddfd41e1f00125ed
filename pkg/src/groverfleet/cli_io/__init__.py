"""Configuration, ingestion and report emission for the command line."""
