"""Graph ingestion: edge-list files and one-token graph specs."""
