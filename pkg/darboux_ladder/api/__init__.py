"""API endpoints for the Darboux ladder server."""
