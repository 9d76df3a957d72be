"""
Header Component for Streamlit UI
Title line plus the name of the loaded report
"""
from typing import Optional

import streamlit as st
from core.config import AppConfig


def render_header(report_name: Optional[str] = None):
    """Render the viewer title; the subtitle names the report once one is loaded"""
    subtitle = f"Showing {report_name}" if report_name else "No report loaded"
    st.markdown(f"""
        <div class="main-header">
            <span class="header-text">{AppConfig.TITLE}</span>
        </div>
        <div class="sub-header">
            {subtitle} · rpgraph {AppConfig.VERSION}
        </div>
    """, unsafe_allow_html=True)
