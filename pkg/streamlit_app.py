"""
Streamlit report viewer for rpgraph
Loads a campaign report JSON and shows verdicts, refutations and certificates.
Read-only: nothing is computed here beyond formatting.
"""
import json
from pathlib import Path
import sys

import streamlit as st

# Add the project root to the Python path for proper imports
PROJECT_ROOT = Path(__file__).parent
sys.path.insert(0, str(PROJECT_ROOT))

from streamlit_ui.config import StreamlitConfig
from streamlit_ui.components import render_claims_panel, render_header, render_refutations_panel
from utils.serialization import ReportSerializer


def initialize_session_state():
    """Initialize Streamlit session state variables"""
    if 'report' not in st.session_state:
        st.session_state.report = None

    if 'report_name' not in st.session_state:
        st.session_state.report_name = None

    if 'load_error' not in st.session_state:
        st.session_state.load_error = None


def apply_custom_css():
    """Apply custom CSS styling"""
    colors = StreamlitConfig.COLORS
    st.markdown(f"""
        <style>
        .main {{
            background: {colors['background']};
            color: {colors['text_primary']};
        }}

        #MainMenu {{visibility: hidden;}}
        footer {{visibility: hidden;}}
        .stDeployButton {{display: none;}}

        .main-header {{
            text-align: center;
            font-size: 2.4rem;
            font-weight: 800;
            margin-bottom: 0.3rem;
        }}

        .header-text {{
            color: {colors['primary']};
        }}

        .sub-header {{
            text-align: center;
            color: {colors['text_secondary']};
            font-size: 0.95rem;
            margin-bottom: 1.5rem;
        }}

        .panel-header {{
            color: {colors['text_primary']};
            font-size: 0.85rem;
            font-weight: 600;
            margin: {StreamlitConfig.PANEL_SPACING}px 0 1rem 0;
            padding-bottom: 0.5rem;
            border-bottom: 1px solid {colors['border']};
            text-transform: uppercase;
            letter-spacing: 1px;
        }}

        .claim-row {{
            background: {colors['card_bg']};
            border-radius: 8px;
            padding: 10px 14px;
            margin: 6px 0;
        }}

        .claim-statement {{
            color: {colors['text_secondary']};
            font-size: 0.85rem;
        }}
        </style>
    """, unsafe_allow_html=True)


def load_report(raw, name):
    """Decode an uploaded or on-disk report into session state"""
    try:
        report = json.loads(raw)
        if not isinstance(report, dict) or "claims" not in report:
            raise ValueError("not a campaign report (no 'claims' key)")
    except ValueError as e:
        st.session_state.load_error = f"{name}: {e}"
        return
    st.session_state.report = report
    st.session_state.report_name = name
    st.session_state.load_error = None


def render_loader():
    """Upload a report, or pick one from the reports directory"""
    st.markdown('<div class="panel-header">Report</div>', unsafe_allow_html=True)

    uploaded = st.file_uploader("Campaign report JSON", type=["json"])
    if uploaded is not None and uploaded.name != st.session_state.report_name:
        load_report(uploaded.getvalue().decode("utf-8"), uploaded.name)

    reports_dir = StreamlitConfig.REPORTS_DIR
    saved = sorted(reports_dir.glob("*.json")) if reports_dir.is_dir() else []
    if saved:
        choice = st.selectbox("Or a saved report", options=[p.name for p in saved], index=None)
        if choice and choice != st.session_state.report_name:
            try:
                st.session_state.report = ReportSerializer.read_json(reports_dir / choice)
                st.session_state.report_name = choice
                st.session_state.load_error = None
            except (OSError, ValueError) as e:
                st.session_state.load_error = f"{choice}: {e}"

    if st.session_state.load_error:
        st.error(st.session_state.load_error)

    report = st.session_state.report
    if report is not None:
        with st.expander("Campaign config", expanded=False):
            st.json(report.get("config", {}))


def main():
    """Main application function"""
    st.set_page_config(
        page_title="rpgraph report viewer",
        layout="wide",
        initial_sidebar_state="collapsed"
    )

    initialize_session_state()
    apply_custom_css()
    header_slot = st.container()

    col1, col2 = st.columns([1, 2])
    with col1:
        render_loader()
    with col2:
        report = st.session_state.report
        if report is None:
            st.info("Load a report written by `rpgraph verify --out` to view it.")
        else:
            render_claims_panel(report)
            render_refutations_panel(report)

    with header_slot:
        render_header(st.session_state.report_name)


if __name__ == "__main__":
    main()
