"""
UI Components for the rpgraph report viewer
"""
from streamlit_ui.components.header import render_header
from streamlit_ui.components.claims_panel import render_claims_panel
from streamlit_ui.components.refutations_panel import render_refutations_panel

__all__ = ['render_header', 'render_claims_panel', 'render_refutations_panel']
